#include "bohr/sharp_constants.hpp"

#include <catch_amalgamated.hpp>

using namespace bohr;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("sharp constants", "[constants]")
{
    const auto& c = sharp_constants();
    CHECK_THAT(c.a1.value, WithinAbs(0.567284, 5e-7));
    CHECK_THAT(c.lambda1, WithinAbs(18.6095, 5e-5));
    CHECK_THAT(c.a2.value, WithinAbs(0.537869, 5e-7));
    CHECK_THAT(c.lambda2, WithinAbs(16.4618, 5e-5));
    CHECK_THAT(c.r0, WithinAbs(0.236068, 1e-6));
    CHECK_THAT(c.p, WithinAbs(2.472136, 1e-6));
    CHECK(c.a1.sign_change_count == 1);
    CHECK(c.a2.sign_change_count == 1);
}

TEST_CASE("lambda formulas", "[constants]")
{
    CHECK(lambda_thm1(0.0) == 8.0);
    CHECK(lambda_thm1(0.6 - 1e-8) > 1e6);
    CHECK_THROWS_AS(lambda_thm1(0.6), std::domain_error);
    CHECK_THROWS_AS(lambda_thm2(0.5), std::domain_error);
    CHECK(std::abs(lambda_thm2(0.5 + 1e-8)) > 1e6);

    const double v = lambda_thm2(0.6);
    CHECK(v > 0.0);
    const rational exact = lambda_thm2_formula(rational(0.6));
    CHECK_THAT(v, WithinRel(static_cast<double>(exact), 1e-12));
    CHECK(lambda_thm1_formula(rational(0)) == 8);
}

TEST_CASE("remark polynomials", "[constants]")
{
    CHECK(remark_consistency(RemarkPolynomial::Thm1Quintic) < 1e-10);
    CHECK(remark_consistency(RemarkPolynomial::Thm2Quartic) < 1e-10);
    CHECK(remark_consistency(RemarkPolynomial::Thm1Quintic, 0.1) > 1e-4);
    CHECK(remark_consistency(RemarkPolynomial::Thm2Quartic, 0.1) > 1e-4);
    CHECK(remark_consistency(RemarkPolynomial::Thm1Quintic, -0.1) > 1e-4);

    const auto& c = sharp_constants();
    const auto l1 = remark_lambda_root(RemarkPolynomial::Thm1Quintic);
    CHECK_THAT(l1.value, WithinAbs(c.lambda1, 1e-9));
    const auto l1_narrow = remark_lambda_root(RemarkPolynomial::Thm1Quintic, 18.0, 19.0);
    CHECK_THAT(l1_narrow.value, WithinAbs(c.lambda1, 1e-9));
    const auto l2 = remark_lambda_root(RemarkPolynomial::Thm2Quartic);
    CHECK_THAT(l2.value, WithinAbs(c.lambda2, 1e-9));
    CHECK(lambda1_quintic().leading() < 0);
}

TEST_CASE("Phi factors through the root polynomial", "[constants]")
{
    // Exact in rational arithmetic: the identity holds for every t.
    CHECK(identity_check<rational>(IdentityKind::Thm1) == 0.0);
    CHECK(identity_check<rational>(IdentityKind::Thm2) == 0.0);
    CHECK(identity_check<double>(IdentityKind::Thm1) < 1e-10);
    CHECK(identity_check<double>(IdentityKind::Thm2) < 1e-10);

    const auto& c = sharp_constants();
    const auto [l1, r1] = identity_sides(IdentityKind::Thm1, c.a1.value);
    CHECK(std::abs(l1) < 1e-9 * 4096);
    CHECK(std::abs(r1) < 1e-9 * 4096);
    const auto [l2, r2] = identity_sides(IdentityKind::Thm2, c.a2.value);
    CHECK(std::abs(l2) < 1e-9 * 1920);
    CHECK(std::abs(r2) < 1e-9 * 1920);
    const auto [lt, rt] = identity_sides(IdentityKind::Thm1, 1.0 / 3.0);
    CHECK_THAT(lt, WithinRel(rt, 1e-10));
}
