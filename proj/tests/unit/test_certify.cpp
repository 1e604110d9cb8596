#include "bohr/certify.hpp"

#include <catch_amalgamated.hpp>

using namespace bohr;
using Catch::Matchers::WithinAbs;

namespace {

double sample_at(const Certificate& c, double t)
{
    for (const auto& s : c.samples)
        if (s.t == t) return s.value;
    FAIL("no sample at " << t);
    return 0.0;
}

} // namespace

TEST_CASE("Phi certificates", "[certify]")
{
    const auto& c = sharp_constants();
    const auto p1 = certify_nonneg(ProofFunctionKind::Phi1, c.lambda1, c.a1.value);
    CHECK(p1.verdict == Verdict::Verified);
    CHECK_THAT(sample_at(p1, 1.0 / 3.0), WithinAbs(476.10, 0.1));
    CHECK(sample_at(p1, 1.0) == 4096.0);
    REQUIRE(p1.exclusion_windows.size() == 1);
    CHECK_THAT(p1.exclusion_windows[0].center, WithinAbs(c.a1.value, 1e-12));

    const auto p2 = certify_nonneg(ProofFunctionKind::Phi2, c.lambda2, c.a2.value);
    CHECK(p2.verdict == Verdict::Verified);
    CHECK_THAT(sample_at(p2, 1.0 / 3.0), WithinAbs(210.58, 0.1));
    CHECK(sample_at(p2, 1.0) == 1920.0);

    const auto bad = certify_nonneg(ProofFunctionKind::Phi1, c.lambda1 + 0.5, c.a1.value);
    CHECK(bad.verdict == Verdict::Violated);
    REQUIRE_FALSE(bad.witnesses.empty());
    CHECK_THAT(bad.witnesses[0].t, WithinAbs(c.a1.value, 0.01));
    CHECK(bad.witnesses[0].value < 0.0);
}

TEST_CASE("a verified certificate survives a finer grid", "[certify]")
{
    const auto& c = sharp_constants();
    const double scale = 4096.0;
    for (int i = 0; i <= 66670; ++i) {
        const double t = 1.0 / 3.0 + (2.0 / 3.0) * i / 66670.0;
        CHECK(proof_function(ProofFunctionKind::Phi1, t, c.lambda1) >= -1e-12 * scale);
    }
}

TEST_CASE("Psi certificates", "[certify]")
{
    const auto& c = sharp_constants();
    const auto s1 = certify_monotone_increasing(ProofFunctionKind::Psi1, c.lambda1);
    CHECK(s1.verdict == Verdict::Verified);
    CHECK_THAT(s1.max_value, WithinAbs(0.977404, 1e-5));
    CHECK(s1.max_value <= 0.98);
    const auto s2 = certify_monotone_increasing(ProofFunctionKind::Psi2, c.lambda2);
    CHECK(s2.verdict == Verdict::Verified);
    CHECK_THAT(s2.max_value, WithinAbs(0.986671, 1e-5));
    CHECK(s2.max_value <= 0.987);
    const auto big = certify_monotone_increasing(ProofFunctionKind::Psi1, 100.0);
    CHECK(big.verdict == Verdict::Violated);
    CHECK(big.max_value > 1.0);
}

TEST_CASE("theorem bundles", "[certify]")
{
    for (auto k : all_functional_kinds) {
        const auto rep = certify_theorem(k);
        INFO(to_string(k));
        CHECK(rep.verdict == Verdict::Verified);
        for (const auto& cert : rep.certificates) {
            INFO(cert.target);
            CHECK(cert.verdict == Verdict::Verified);
        }
    }
    const auto t1 = certify_theorem(FunctionalKind::Thm1);
    CHECK(t1.certificates.size() == 5);
    const auto& eq = t1.certificates[3];
    REQUIRE(eq.witnesses.size() == 1);
    CHECK_THAT(eq.witnesses[0].t, WithinAbs(0.567284, 5e-7));
    CHECK_THAT(eq.witnesses[0].value, WithinAbs(1.0, 1e-6));
}

TEST_CASE("sharpness excess at the extremal function", "[certify]")
{
    const auto& c = sharp_constants();
    const auto rep = certify_theorem(FunctionalKind::Thm1);
    const auto& sharp = rep.certificates.back();
    const double s = moebius_area_ratio(MoebiusFunction(c.a1.value), 1.0 / 3.0);
    CHECK_THAT(sharp.witnesses[0].value, WithinAbs(0.01 * s * s, 1e-7));
    CHECK_THAT(sharp.witnesses[0].value, WithinAbs(3.02e-5, 0.1e-5));
}

TEST_CASE("perturbed constants are refuted", "[certify]")
{
    const auto& c = sharp_constants();
    TheoremOptions o1;
    o1.lambda_override = c.lambda1 + 0.01;
    CHECK(certify_theorem(FunctionalKind::Thm1, o1).verdict == Verdict::Violated);
    TheoremOptions o2;
    o2.lambda_override = c.lambda2 + 0.01;
    CHECK(certify_theorem(FunctionalKind::Thm2, o2).verdict == Verdict::Violated);
    TheoremOptions o3;
    o3.p_override = golden_area_weight + 0.01;
    CHECK(certify_theorem(FunctionalKind::Thm3, o3).verdict == Verdict::Violated);
    CHECK_THROWS_AS(certify_theorem(FunctionalKind::Thm3, o1), std::invalid_argument);
}

TEST_CASE("Theorem 3 coefficient signs", "[certify]")
{
    const auto cert = certify_thm3_coefficient_signs();
    CHECK(cert.verdict == Verdict::Verified);
    REQUIRE(cert.witnesses.size() == 3);
    CHECK_THAT(cert.witnesses[0].value, WithinAbs(-0.055728, 1e-6));
    CHECK_THAT(cert.witnesses[1].value, WithinAbs(-0.042572, 1e-6));
    // The third constant evaluates to -0.0031056, not the -0.003097 quoted for it.
    CHECK_THAT(cert.witnesses[2].value, WithinAbs(-161.0 + 72.0 * std::sqrt(5.0), 1e-12));
    for (int i = 0; i < 10000; ++i) CHECK(thm3_delta(i / 10000.0, 0.0) <= 0.0);
}

TEST_CASE("certificates are deterministic", "[certify]")
{
    const auto a = certify_theorem(FunctionalKind::Thm2);
    const auto b = certify_theorem(FunctionalKind::Thm2);
    REQUIRE(a.certificates.size() == b.certificates.size());
    for (std::size_t i = 0; i < a.certificates.size(); ++i) CHECK(a.certificates[i] == b.certificates[i]);
}

TEST_CASE("remark 2 witness", "[certify]")
{
    const auto w = remark2_witness([](double t) { return t; });
    CHECK_THAT(w.area_ratio, WithinAbs(0.054965, 1e-6));
    CHECK(w.excess > 0.0);
    CHECK_THAT(w.functional, WithinAbs(1.0, 1e-6));
    CHECK(remark2_witness([](double t) { return t * t; }).excess > 0.0);
    CHECK_THROWS_AS(remark2_witness([](double) { return 0.0; }), std::invalid_argument);
}

TEST_CASE("combine", "[certify]")
{
    std::vector<Certificate> cs(2);
    cs[0].verdict = cs[1].verdict = Verdict::Verified;
    CHECK(combine(cs) == Verdict::Verified);
    cs[1].verdict = Verdict::Inconclusive;
    CHECK(combine(cs) == Verdict::Inconclusive);
    cs[0].verdict = Verdict::Violated;
    CHECK(combine(cs) == Verdict::Violated);
}
