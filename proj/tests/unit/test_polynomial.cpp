#include "bohr/polynomial.hpp"
#include "bohr/sharp_constants.hpp"

#include <catch_amalgamated.hpp>

using namespace bohr;
using Catch::Matchers::WithinAbs;

TEST_CASE("exact evaluation", "[polynomial]")
{
    CHECK(psi_polynomial()(rational(1)) == 512);
    CHECK(psi_polynomial()(rational(0)) == -405);
    const RealPolynomial x2m2{-2, 0, 1};
    CHECK_THAT(x2m2(std::sqrt(2.0)), WithinAbs(0.0, 1e-15));
    CHECK(x2m2.degree() == 2);
    CHECK_THROWS_AS(RealPolynomial({0, 0}), std::invalid_argument);
}

TEST_CASE("binary64 to rational conversion is exact", "[polynomial]")
{
    for (double x : {0.1, 1.0 / 3.0, 0.567283936817405, 1e-300, 12345.678}) {
        const rational q(x);
        CHECK(static_cast<double>(q) == x);
    }
    CHECK(rational(0.5) == rational(1, 2));
}

TEST_CASE("Sturm counts", "[polynomial]")
{
    CHECK(count_roots(psi_polynomial(), 0, 1) == 1);
    CHECK(count_roots(thm2_quartic(), 0, 1) == 1);
    const RealPolynomial cubic{-6, 11, -6, 1}; // (x-1)(x-2)(x-3)
    CHECK(count_roots(cubic, 0, 4) == 3);
    CHECK(count_roots(cubic, 1, 3) == 2); // half-open (1, 3]
    CHECK(count_roots(cubic, rational(3, 2), rational(5, 2)) == 1);
    const RealPolynomial double_root{1, -2, 1}; // (x-1)^2 counted once
    CHECK(count_roots(double_root, 0, 2) == 1);
    CHECK_THROWS_AS(count_roots(cubic, 2, 1), std::invalid_argument);
}

TEST_CASE("isolate_unique_root", "[polynomial]")
{
    const auto a1 = isolate_unique_root(psi_polynomial(), 0.0, 1.0, 1e-12);
    CHECK_THAT(a1.value, WithinAbs(0.567284, 5e-7));
    CHECK(a1.sign_change_count == 1);
    CHECK(a1.hi - a1.lo <= 1e-12);
    CHECK(psi_polynomial().sign_at(a1.lo) * psi_polynomial().sign_at(a1.hi) < 0);

    const auto a2 = isolate_unique_root(thm2_quartic(), 0.0, 1.0, 1e-12);
    CHECK_THAT(a2.value, WithinAbs(0.537869, 5e-7));

    const auto s2 = isolate_unique_root(RealPolynomial{-2, 0, 1}, 1.0, 2.0);
    CHECK_THAT(s2.value, WithinAbs(std::sqrt(2.0), 1e-14));
}

TEST_CASE("root isolation failures", "[polynomial]")
{
    const RealPolynomial cubic{-6, 11, -6, 1};
    try {
        isolate_unique_root(cubic, 0.5, 3.5);
        FAIL("expected a uniqueness failure");
    } catch (const root_isolation_error& e) {
        CHECK(e.count() == 3);
    }
    CHECK_THROWS_AS(isolate_unique_root(cubic, 3.5, 9.0), root_isolation_error);
    // Double root: one distinct root but no sign change.
    CHECK_THROWS_AS(isolate_unique_root(RealPolynomial{1, -2, 1}, 0.0, 2.0), root_isolation_error);
    CHECK_THROWS_AS(isolate_unique_root(cubic, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("root values are stable under tolerance refinement", "[polynomial]")
{
    for (const auto* p : {&psi_polynomial(), &thm2_quartic()}) {
        const double coarse = isolate_unique_root(*p, 0.0, 1.0, 1e-8).value;
        const double fine = isolate_unique_root(*p, 0.0, 1.0, 1e-14).value;
        CHECK(std::abs(coarse - fine) < 1e-8);
    }
}
