#include "bohr/sampler.hpp"
#include "bohr/sharp_constants.hpp"

#include <catch_amalgamated.hpp>

using namespace bohr;
using Catch::Matchers::WithinAbs;

TEST_CASE("Blaschke validation", "[sampler]")
{
    CHECK_THROWS_AS(BlaschkeProduct({complex(1.0)}), std::invalid_argument);
    CHECK_THROWS_AS(BlaschkeProduct({}, complex(1.1)), std::invalid_argument);
    CHECK_THROWS_AS(random_blaschke(17, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_blaschke(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(to_series(BlaschkeProduct{}, 31), std::invalid_argument);
}

TEST_CASE("random_blaschke", "[sampler]")
{
    const auto b0 = random_blaschke(0, 5);
    CHECK(b0.degree() == 0);
    CHECK_THAT(std::abs(b0(complex(0.3, 0.2))), WithinAbs(1.0, 1e-15));

    const auto a = random_blaschke(3, 42), b = random_blaschke(3, 42);
    REQUIRE(a.degree() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(a.zeros()[i] == b.zeros()[i]);
        CHECK(std::abs(a.zeros()[i]) <= 0.95);
    }
    CHECK(a.rotation() == b.rotation());
    CHECK(random_blaschke(3, 43).zeros()[0] != a.zeros()[0]);
}

TEST_CASE("to_series", "[sampler]")
{
    const complex rot = std::polar(1.0, 0.7);
    const auto s0 = to_series(BlaschkeProduct({}, rot), 32);
    CHECK(s0[0] == rot);
    for (std::size_t k = 1; k <= 32; ++k) CHECK(s0[k] == complex(0.0));
    CHECK_FALSE(s0.truncated());

    const auto z2 = to_series(BlaschkeProduct({complex(0.0), complex(0.0)}), 40);
    CHECK(z2[2] == complex(1.0));
    CHECK(std::abs(z2[0]) + std::abs(z2[1]) + std::abs(z2[3]) == 0.0);

    // (z - a)/(1 - a z) = -(a - z)/(1 - a z)
    const double a = 0.567284;
    const auto s = to_series(BlaschkeProduct({complex(a)}), 512);
    const auto m = moebius_coefficients(MoebiusFunction(a), 512);
    for (std::size_t k = 0; k <= 512; ++k) CHECK(std::abs(s[k] + m[k]) <= 1e-12);

    const auto same = to_series(random_blaschke(4, 9));
    const auto again = to_series(random_blaschke(4, 9));
    for (std::size_t k = 0; k <= 512; ++k) CHECK(same[k] == again[k]);
}

TEST_CASE("Blaschke series are unimodular on the circle", "[sampler][property]")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto b = random_blaschke(static_cast<int>(seed % 6), seed);
        const auto s = to_series(b);
        for (int j = 0; j < 256; ++j) {
            const complex z = std::polar(1.0, 6.283185307179586 * j / 256.0);
            CHECK_THAT(std::abs(eval(s, z)), WithinAbs(1.0, 1e-6));
            CHECK_THAT(std::abs(b(z)), WithinAbs(1.0, 1e-12));
        }
    }
}

TEST_CASE("random polynomials stay in the unit ball", "[sampler][property]")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto p = random_polynomial(static_cast<int>(seed % 8), seed);
        const auto est = sup_norm_estimate(p, 4096);
        CHECK(est.bound() <= 1.0);
        CHECK(est.grid_max > 0.9);
    }
}

TEST_CASE("property_trial examples", "[sampler]")
{
    const auto& c = sharp_constants();
    const auto thm1 = FunctionalSpec::thm1(c.lambda1);
    const double r = 1.0 / 3.0;
    const double s = 2.0 * std::pow(r, 4);
    const double expected = 1.0 - (r * r + 16.0 / 9.0 * s + c.lambda1 * s * s);
    CHECK_THAT(property_trial(thm1, to_series(BlaschkeProduct({0.0, 0.0})), r), WithinAbs(expected, 1e-12));
    CHECK_THAT(expected, WithinAbs(0.83364, 1e-5));
    CHECK_THAT(property_trial(thm1, moebius_coefficients(MoebiusFunction(c.a1.value)), r), WithinAbs(0.0, 1e-6));
    for (auto k : all_functional_kinds) CHECK(property_trial(sharp_spec(k), PowerSeries{0.0}, 0.2) == 1.0);
    CHECK_THROWS_AS(property_trial(FunctionalSpec::thm3(), PowerSeries{0.0}, 0.3), std::domain_error);
}

TEST_CASE("sample batches", "[sampler]")
{
    std::vector<FunctionalSpec> specs;
    for (auto k : all_functional_kinds) specs.push_back(sharp_spec(k));
    SampleOptions opt;
    opt.trials = 300;
    opt.seed = 3;
    opt.family = SampleFamily::Mixed;
    const auto a = sample_batch(specs, opt);
    CHECK(a.min_slack >= -1e-9);
    CHECK(a.violations.empty());
    CHECK(a.evaluations == 300 * specs.size());
    std::size_t total = 0;
    for (auto h : a.histogram) total += h;
    CHECK(total == a.evaluations);
    const auto b = sample_batch(specs, opt);
    CHECK(a.min_slack == b.min_slack);
    CHECK(a.mean_slack == b.mean_slack);

    // A spec with an inflated constant must be caught.
    const auto& c = sharp_constants();
    const std::vector<FunctionalSpec> bad{FunctionalSpec::thm1(c.lambda1 * 50)};
    SampleOptions many;
    many.trials = 200;
    many.max_degree = 1;
    CHECK_FALSE(sample_batch(bad, many).violations.empty());
    CHECK_THROWS_AS(sample_batch(bad, SampleOptions{0}), std::invalid_argument);
}
