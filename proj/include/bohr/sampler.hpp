#pragma once

// Random bounded analytic functions for property testing: finite Blaschke
// products and sup-normalized polynomials.

#include "bohr/detail/parallel.hpp"
#include "bohr/functionals.hpp"
#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace bohr {

inline constexpr double blaschke_zero_limit = 1.0 - 1e-9;
inline constexpr double blaschke_sample_radius = 0.95;
inline constexpr int max_blaschke_degree = 16;

/// rotation * prod (z - z_i) / (1 - conj(z_i) z).
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;

    explicit BlaschkeProduct(std::vector<complex> zeros, complex rotation = 1.0)
        : zeros_(std::move(zeros)), rotation_(rotation)
    {
        for (const auto& z : zeros_)
            if (!(std::abs(z) <= blaschke_zero_limit))
                throw std::invalid_argument("BlaschkeProduct: zeros must satisfy |z| <= 1 - 1e-9");
        if (!(std::abs(std::abs(rotation_) - 1.0) <= 1e-12))
            throw std::invalid_argument("BlaschkeProduct: rotation must be unimodular");
    }

    std::span<const complex> zeros() const { return zeros_; }
    complex rotation() const { return rotation_; }
    std::size_t degree() const { return zeros_.size(); }

    complex operator()(complex z) const
    {
        complex v = rotation_;
        for (const auto& c : zeros_) v *= (z - c) / (1.0 - std::conj(c) * z);
        return v;
    }

private:
    std::vector<complex> zeros_;
    complex rotation_ = 1.0;
};

namespace detail {

inline double uniform_angle(std::mt19937_64& gen)
{
    return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(gen);
}

inline BlaschkeProduct draw_blaschke(int degree, std::mt19937_64& gen)
{
    if (degree < 0 || degree > max_blaschke_degree)
        throw std::invalid_argument("random_blaschke: degree must lie in [0, 16]");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<complex> zeros;
    zeros.reserve(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) {
        // sqrt(U) gives the area-uniform radius.
        const double rho = blaschke_sample_radius * std::sqrt(unit(gen));
        zeros.push_back(std::polar(rho, uniform_angle(gen)));
    }
    const complex rot = std::polar(1.0, uniform_angle(gen));
    return BlaschkeProduct(std::move(zeros), rot);
}

inline std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

} // namespace detail

inline BlaschkeProduct random_blaschke(int degree, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    return detail::draw_blaschke(degree, gen);
}

/// Taylor coefficients a_0..a_N, one factor at a time. Multiplying f by
/// (z - c)/(1 - conj(c) z) is g_k = conj(c) g_{k-1} + f_{k-1} - c f_k.
inline PowerSeries to_series(const BlaschkeProduct& b, std::size_t order = default_order)
{
    if (order < 32) throw std::invalid_argument("to_series: order must be at least 32");
    std::vector<complex> f(order + 1, complex{0.0});
    std::vector<complex> g(order + 1);
    f[0] = b.rotation();
    bool exact = true;
    for (const auto& c : b.zeros()) {
        const complex cc = std::conj(c);
        complex prev{0.0};
        for (std::size_t k = 0; k <= order; ++k) {
            const complex shifted = k > 0 ? f[k - 1] : complex{0.0};
            prev = cc * prev + shifted - c * f[k];
            g[k] = prev;
        }
        f.swap(g);
        exact = exact && c == complex{0.0};
    }
    // A product of pure z factors is the monomial rotation * z^n.
    const bool monomial = exact && b.degree() <= order;
    return PowerSeries(std::move(f), 1.0, monomial ? Truncation::Exact : Truncation::Truncated);
}

inline constexpr double polynomial_deflation = 0.98;

/// Complex Gaussian coefficients scaled so the estimated sup norm is 0.98.
inline PowerSeries random_polynomial(int degree, std::uint64_t seed)
{
    if (degree < 0 || degree > 64) throw std::invalid_argument("random_polynomial: degree must lie in [0, 64]");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::vector<complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = {normal(gen), normal(gen)};
    const double bound = sup_norm_estimate(PowerSeries(c, std::numeric_limits<double>::max() / 4)).bound();
    if (!(bound > 0.0)) return PowerSeries{complex{0.0}};
    const double scale = polynomial_deflation / bound;
    for (auto& x : c) x *= scale;
    return PowerSeries(std::move(c));
}

/// 1 - (functional value including truncation allowances).
inline double property_trial(const FunctionalSpec& spec, const PowerSeries& s, double r)
{
    if (r > spec.radius() + 1e-15) throw std::domain_error("property_trial: r exceeds the radius of the functional");
    return 1.0 - eval_functional(spec, s, r);
}

enum class SampleFamily { Blaschke, Polynomial, Mixed };

struct SampleOptions {
    std::size_t trials = 10000;
    int max_degree = 5;     ///< trial i uses degree i mod (max_degree + 1)
    std::uint64_t seed = 0;
    SampleFamily family = SampleFamily::Blaschke;
    std::size_t order = default_order;
    double violation_threshold = -1e-9;
    std::size_t histogram_bins = 10;
};

struct SampleViolation {
    std::size_t trial = 0;
    int degree = 0;
    FunctionalKind kind = FunctionalKind::Classical;
    double slack = 0.0;
};

struct SampleSummary {
    std::size_t trials = 0;
    std::size_t evaluations = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    double max_slack = -std::numeric_limits<double>::infinity();
    double mean_slack = 0.0;
    std::size_t argmin_trial = 0;
    FunctionalKind argmin_kind = FunctionalKind::Classical;
    /// Counts over [min_slack, max_slack] split evenly.
    std::vector<std::size_t> histogram;
    std::vector<SampleViolation> violations;
};

/// Runs trials in parallel; every trial owns a generator seeded from (seed, index).
/// Each sampled function is evaluated against every spec at that spec's radius.
inline SampleSummary sample_batch(std::span<const FunctionalSpec> specs, const SampleOptions& opt = {})
{
    if (opt.trials == 0) throw std::invalid_argument("sample_batch: trials must be >= 1");
    if (specs.empty()) throw std::invalid_argument("sample_batch: no functionals given");
    if (opt.max_degree < 0 || opt.max_degree > max_blaschke_degree)
        throw std::invalid_argument("sample_batch: degree must lie in [0, 16]");

    const std::size_t m = specs.size();
    std::vector<double> slack(opt.trials * m);
    detail::parallel_for(
        opt.trials,
        [&](std::size_t i) {
            auto gen = detail::trial_generator(opt.seed, i);
            const int degree = static_cast<int>(i % static_cast<std::size_t>(opt.max_degree + 1));
            const bool poly = opt.family == SampleFamily::Polynomial || (opt.family == SampleFamily::Mixed && i % 2 == 1);
            const PowerSeries s = poly ? random_polynomial(degree, gen())
                                       : to_series(detail::draw_blaschke(degree, gen), opt.order);
            // One circle maximum per distinct radius, shared by the specs that need it.
            std::vector<std::pair<double, double>> circle;
            for (std::size_t j = 0; j < m; ++j) {
                const double r = specs[j].radius();
                double cm = 0.0;
                if (specs[j].lead() != LeadTerm::CenterModulus) {
                    auto it = std::find_if(circle.begin(), circle.end(), [r](const auto& e) { return e.first == r; });
                    if (it == circle.end()) {
                        circle.emplace_back(r, circle_max_modulus(s, r).upper());
                        it = circle.end() - 1;
                    }
                    cm = it->second;
                }
                slack[i * m + j] = 1.0 - eval_functional_with_circle_max(specs[j], s, r, cm);
            }
        },
        16);

    SampleSummary out;
    out.trials = opt.trials;
    out.evaluations = slack.size();
    double total = 0.0;
    for (std::size_t idx = 0; idx < slack.size(); ++idx) {
        const double v = slack[idx];
        total += v;
        const std::size_t i = idx / m;
        if (v < out.min_slack) {
            out.min_slack = v;
            out.argmin_trial = i;
            out.argmin_kind = specs[idx % m].kind;
        }
        out.max_slack = std::max(out.max_slack, v);
        if (v < opt.violation_threshold)
            out.violations.push_back({i, static_cast<int>(i % static_cast<std::size_t>(opt.max_degree + 1)),
                                      specs[idx % m].kind, v});
    }
    out.mean_slack = total / static_cast<double>(slack.size());
    out.histogram.assign(std::max<std::size_t>(opt.histogram_bins, 1), 0);
    const double width = out.max_slack - out.min_slack;
    for (double v : slack) {
        std::size_t bin = width > 0.0 ? static_cast<std::size_t>((v - out.min_slack) / width * out.histogram.size()) : 0;
        ++out.histogram[std::min(bin, out.histogram.size() - 1)];
    }
    return out;
}

} // namespace bohr
