#include "bohr/functionals.hpp"
#include "bohr/sharp_constants.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace bohr;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const double third = 1.0 / 3.0;

PowerSeries blaschke2(std::mt19937_64& gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<complex> f(513, 0.0);
    f[0] = std::polar(1.0, 6.283185307179586 * u(gen));
    const int degree = 1 + static_cast<int>(u(gen) * 3.0);
    for (int d = 0; d < degree; ++d) {
        const complex c = std::polar(0.95 * std::sqrt(u(gen)), 6.283185307179586 * u(gen));
        std::vector<complex> g(f.size());
        complex prev = 0.0;
        for (std::size_t k = 0; k < f.size(); ++k) {
            prev = std::conj(c) * prev + (k ? f[k - 1] : 0.0) - c * f[k];
            g[k] = prev;
        }
        f = g;
    }
    return PowerSeries(f, 1.0, Truncation::Truncated);
}

} // namespace

TEST_CASE("names round-trip", "[functionals]")
{
    for (auto k : all_functional_kinds) CHECK(parse_functional_kind(to_string(k)) == k);
    CHECK_FALSE(parse_functional_kind("thm4"));
    CHECK_THROWS_AS(FunctionalSpec::thm1(-1.0), std::invalid_argument);
}

TEST_CASE("eval_functional examples", "[functionals]")
{
    const auto& c = sharp_constants();
    const auto thm1 = FunctionalSpec::thm1(c.lambda1);
    const double identity = eval_functional(thm1, PowerSeries{0.0, 1.0}, third);
    CHECK_THAT(identity, WithinAbs(third + 16.0 / 81.0 + c.lambda1 / 81.0, 1e-15));
    CHECK_THAT(identity, WithinAbs(0.760605, 1e-5));
    CHECK_THAT(eval_functional(thm1, moebius_coefficients(MoebiusFunction(c.a1.value)), third), WithinAbs(1.0, 1e-6));
    CHECK_THAT(eval_functional(FunctionalSpec::thm2(c.lambda2), moebius_coefficients(MoebiusFunction(c.a2.value)),
                               third),
               WithinAbs(1.0, 1e-5));
    for (auto k : all_functional_kinds) CHECK(eval_functional(sharp_spec(k), PowerSeries{0.0}, 0.3) == 0.0);
    CHECK_THROWS_AS(eval_functional(thm1, PowerSeries{0.0}, 0.75), std::domain_error);
}

TEST_CASE("proof function values", "[functionals]")
{
    const auto& c = sharp_constants();
    CHECK(proof_function(ProofFunctionKind::Phi1, 1.0, c.lambda1) == 4096.0);
    CHECK_THAT(proof_function(ProofFunctionKind::Phi1, third, c.lambda1), WithinAbs(476.10, 0.1));
    CHECK_THAT(proof_function(ProofFunctionKind::Psi1, third, c.lambda1), WithinAbs(0.977404, 1e-5));
    CHECK(proof_function(ProofFunctionKind::Phi2, 1.0, c.lambda2) == 1920.0);
    CHECK_THAT(proof_function(ProofFunctionKind::Phi2, third, c.lambda2), WithinAbs(210.58, 0.1));
    CHECK_THAT(proof_function(ProofFunctionKind::Psi2, third, c.lambda2), WithinAbs(0.986671, 1e-5));
    CHECK(proof_function(ProofFunctionKind::Psi1, third, c.lambda1) <= 0.98);
    CHECK(proof_function(ProofFunctionKind::Psi2, third, c.lambda2) <= 0.987);
}

TEST_CASE("Phi at t = 1 does not depend on lambda", "[functionals][property]")
{
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    for (int i = 0; i < 10; ++i) {
        const double lambda = u(gen);
        CHECK(proof_function(ProofFunctionKind::Phi1, 1.0, lambda) == 4096.0);
        CHECK(proof_function(ProofFunctionKind::Phi2, 1.0, lambda) == 1920.0);
    }
}

TEST_CASE("Phi has a double root at the sharp constant", "[functionals]")
{
    const auto& c = sharp_constants();
    const struct {
        ProofFunctionKind kind;
        double a, lambda;
    } cases[] = {{ProofFunctionKind::Phi1, c.a1.value, c.lambda1}, {ProofFunctionKind::Phi2, c.a2.value, c.lambda2}};
    for (const auto& k : cases) {
        const double scale = proof_function(k.kind, 1.0, k.lambda);
        CHECK(std::abs(proof_function(k.kind, k.a, k.lambda)) <= 1e-6 * scale);
        const double h = 1e-4;
        const double d1 = (proof_function(k.kind, k.a + h, k.lambda) - proof_function(k.kind, k.a - h, k.lambda)) /
                          (2 * h);
        CHECK(std::abs(d1) <= 1e-6 * scale);
        CHECK(std::abs(phi_derivative(k.kind, k.a, k.lambda, 1)) <= 1e-6 * scale);
        CHECK(phi_derivative(k.kind, k.a, k.lambda, 2) > 0.0);
    }
}

TEST_CASE("envelope examples", "[functionals]")
{
    const auto& c = sharp_constants();
    const auto thm1 = FunctionalSpec::thm1(c.lambda1);
    CHECK_THAT(envelope(thm1, c.a1.value, third), WithinAbs(1.0, 1e-6));
    CHECK(envelope(thm1, 1.0, third) == 1.0);
    CHECK_THAT(envelope(thm1, third, third), WithinAbs(0.977404, 1e-6));
    CHECK_THAT(envelope(FunctionalSpec::thm3(), 1.0, golden_radius), WithinAbs(1.0, 1e-15));
}

TEST_CASE("envelope branches agree at a0 = r", "[functionals][property]")
{
    for (auto k : all_functional_kinds) {
        const auto spec = sharp_spec(k);
        for (int j = 1; j <= 20; ++j) {
            const double r = 0.035 * j;
            CHECK_THAT(envelope_a_branch(spec, r, r), WithinAbs(envelope_b_branch(spec, r, r), 1e-12));
        }
    }
}

TEST_CASE("Psi is the b-branch envelope and Phi the a-branch residual", "[functionals][dual]")
{
    const auto& c = sharp_constants();
    for (int i = 0; i <= 50; ++i) {
        const double t = third * i / 50.0;
        CHECK_THAT(proof_function(ProofFunctionKind::Psi1, t, c.lambda1),
                   WithinAbs(envelope_b_branch(FunctionalSpec::thm1(c.lambda1), t, third), 1e-13));
        CHECK_THAT(proof_function(ProofFunctionKind::Psi2, t, c.lambda2),
                   WithinAbs(envelope_b_branch(FunctionalSpec::thm2(c.lambda2), t, third), 1e-13));
    }
    // Phi and 1 - E_A have the same sign and vanish together on [1/3, 1).
    for (int i = 0; i < 100; ++i) {
        const double t = third + (1.0 - third) * i / 100.0;
        for (auto [phi, spec] : {std::pair{ProofFunctionKind::Phi1, FunctionalSpec::thm1(c.lambda1)},
                                 std::pair{ProofFunctionKind::Phi2, FunctionalSpec::thm2(c.lambda2)}}) {
            const double p = proof_function(phi, t, spec.lambda);
            const double d = 1.0 - envelope_a_branch(spec, t, third);
            if (std::abs(p) > 1e-3) CHECK((p > 0) == (d > 0));
        }
    }
}

TEST_CASE("b-branch derivative matches finite differences and its majorants", "[functionals][dual]")
{
    for (auto k : all_functional_kinds) {
        const auto spec = sharp_spec(k);
        const double r = spec.radius();
        const auto bounds = envelope_b_branch_derivative_bounds(spec, r);
        for (int i = 1; i < 40; ++i) {
            const double a = r * i / 40.0;
            const double h = 1e-6;
            const double fd = (envelope_b_branch(spec, a + h, r) - envelope_b_branch(spec, a - h, r)) / (2 * h);
            const double d = envelope_b_branch_derivative(spec, a, r);
            CHECK_THAT(d, WithinAbs(fd, 1e-7));
            CHECK(std::abs(d) <= bounds.first);
            const double d2 =
                (envelope_b_branch_derivative(spec, a + h, r) - envelope_b_branch_derivative(spec, a - h, r)) / (2 * h);
            CHECK(std::abs(d2) <= bounds.second);
        }
    }
}

TEST_CASE("boundary slope is the one-sided derivative at a = 1", "[functionals]")
{
    for (auto k : all_functional_kinds) {
        const auto spec = sharp_spec(k);
        for (double r : {0.2, 0.3, 0.4}) {
            const double delta = 1e-6;
            const double fd = (envelope(spec, 1.0 - delta, r) - 1.0) / delta;
            CHECK_THAT(fd, WithinAbs(envelope_boundary_slope(spec, r), 1e-4));
        }
    }
}

TEST_CASE("thm3_delta", "[functionals]")
{
    CHECK_THAT(thm3_delta(0.9, 0.0), WithinAbs(-0.000599, 1e-6));
    CHECK_THAT(thm3_delta(0.9, 0.5), WithinAbs(0.000504, 1e-6));
    // The factored form at a = 0 is 7(4 sqrt5 - 9).
    CHECK_THAT(thm3_delta(0.0, 0.0), WithinAbs(-0.390097, 1e-6));
    CHECK_THROWS_AS(thm3_delta(1.0, 0.0), std::domain_error);
    // Direct route: |f(r)| + tail + p S_r/pi - 1 for f = (z + a)/(1 + a z).
    const double r = golden_radius, p = golden_area_weight;
    for (int i = 0; i < 20; ++i) {
        const double a = 0.05 * i;
        const double direct = (r + a) / (1 + a * r) + r * (1 - a * a) / (1 - a * r) +
                               p * moebius_area_ratio(MoebiusFunction(a), r) - 1.0;
        CHECK_THAT(thm3_delta(a, 0.0), WithinAbs(direct, 1e-12));
    }
}

TEST_CASE("functional increases with r", "[functionals][property]")
{
    std::mt19937_64 gen(32);
    for (int i = 0; i < 100; ++i) {
        const auto s = blaschke2(gen);
        for (auto k : {FunctionalKind::Thm1, FunctionalKind::Thm3, FunctionalKind::ThmB2}) {
            const auto spec = sharp_spec(k);
            double prev = -1.0;
            for (int j = 1; j <= 10; ++j) {
                const double v = eval_functional(spec, s, spec.radius() * j / 10.0);
                CHECK(v >= prev - 1e-12);
                prev = v;
            }
        }
    }
}

TEST_CASE("functional stays below its envelope", "[functionals][property]")
{
    std::mt19937_64 gen(33);
    for (int i = 0; i < 1000; ++i) {
        const auto s = blaschke2(gen);
        const auto k = all_functional_kinds[static_cast<std::size_t>(i) % all_functional_kinds.size()];
        const auto spec = sharp_spec(k);
        const double r = spec.radius();
        CHECK(eval_functional(spec, s, r) <= envelope(spec, std::min(1.0, std::abs(s[0])), r) + 1e-9);
    }
}

TEST_CASE("circle grid maximum stays below Schwarz-Pick", "[functionals][property]")
{
    std::mt19937_64 gen(34);
    for (int i = 0; i < 200; ++i) {
        const auto s = blaschke2(gen);
        const double r = third;
        const auto m = circle_max_modulus(s, r);
        CHECK(m.value <= schwarz_pick_bound(std::abs(s[0]), r) + 1e-12);
    }
}
