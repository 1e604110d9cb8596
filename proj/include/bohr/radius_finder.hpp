#pragma once

// Bohr-type radii: the largest r at which the worst case of a functional over
// all self-maps stays <= 1, found by bisection on the envelope supremum.

#include "bohr/functionals.hpp"
#include "bohr/lemma_bounds.hpp"
#include "bohr/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bohr {

struct FamilyWorst {
    double sup_value = 0.0;
    double argmax_a = 0.0;
    /// envelope at a = 1 (always 1: the unimodular constants).
    double limit_value = 0.0;
    /// c in E(1 - delta) = limit_value + c delta + O(delta^2).
    double boundary_slope = 0.0;

    /// The family supremum exceeds 1, either in the interior or as a -> 1.
    bool exceeds_one() const
    {
        return sup_value > 1.0 + 1e-12 || (limit_value >= 1.0 - 1e-12 && boundary_slope > 1e-14);
    }
};

namespace detail {

template <typename F>
double golden_section_max(F&& f, double lo, double hi, double& arg, int iterations = 100)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iterations && hi - lo > 1e-15; ++i) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        }
    }
    arg = f1 > f2 ? x1 : x2;
    return std::max(f1, f2);
}

// Maximizes g over a in [0, 1 - 1e-6] on `grid` points, then refines around
// the best point with golden section (the bracket may reach a = 1).
template <typename G>
std::pair<double, double> grid_max_on_unit(G&& g, std::size_t grid, bool refine)
{
    if (grid < 2) throw std::invalid_argument("family grid needs at least 2 points");
    const double top = 1.0 - 1e-6;
    const double step = top / static_cast<double>(grid - 1);
    std::size_t best = 0;
    double best_v = g(0.0);
    for (std::size_t i = 1; i < grid; ++i) {
        const double v = g(static_cast<double>(i) * step);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    double best_a = static_cast<double>(best) * step;
    if (refine) {
        const double lo = best == 0 ? 0.0 : best_a - step;
        const double hi = best + 1 == grid ? 1.0 : best_a + step;
        double arg = best_a;
        const double v = golden_section_max(g, lo, hi, arg);
        if (v > best_v) {
            best_v = v;
            best_a = arg;
        }
    }
    return {best_v, best_a};
}

} // namespace detail

/// sup over |a_0| in [0, 1] of the envelope at radius r.
inline FamilyWorst family_worst(const FunctionalSpec& spec, double r, std::size_t grid = 10000, bool refine = true)
{
    require_area_domain(r, "family_worst");
    FamilyWorst w;
    const auto [v, a] = detail::grid_max_on_unit([&](double x) { return envelope(spec, x, r); }, grid, refine);
    w.limit_value = envelope(spec, 1.0, r);
    w.boundary_slope = envelope_boundary_slope(spec, r);
    if (w.limit_value >= v) {
        w.sup_value = w.limit_value;
        w.argmax_a = 1.0;
    } else {
        w.sup_value = v;
        w.argmax_a = a;
    }
    return w;
}

struct RadiusProbe {
    double r = 0.0;
    double sup_value = 0.0;
    bool exceeds = false;
};

struct RadiusResult {
    double radius = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int iterations = 0;
    double worst_param = 0.0;
    /// The predicate held on the whole search interval; radius is the upper end.
    bool hit_upper = false;
    std::vector<RadiusProbe> trace;
};

inline constexpr double radius_search_lo = 0.05;

/// Bisection on r in [0.05, 1/sqrt(2)] of "family sup <= 1".
inline RadiusResult bohr_radius(const FunctionalSpec& spec, double tol = 1e-9, std::size_t grid = 10000)
{
    if (!(tol >= 1e-12)) throw std::invalid_argument("bohr_radius: tol must be >= 1e-12");
    RadiusResult res;
    double lo = radius_search_lo, hi = inv_sqrt2;
    auto probe = [&](double r) {
        const auto w = family_worst(spec, r, grid, true);
        res.trace.push_back({r, w.sup_value, w.exceeds_one()});
        return w;
    };
    if (probe(lo).exceeds_one()) throw std::runtime_error("bohr_radius: functional exceeds 1 even at small r");
    const auto top = probe(hi);
    if (!top.exceeds_one()) {
        res.radius = res.lo = res.hi = hi;
        res.worst_param = top.argmax_a;
        res.hit_upper = true;
        return res;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (probe(mid).exceeds_one())
            hi = mid;
        else
            lo = mid;
        ++res.iterations;
    }
    res.lo = lo;
    res.hi = hi;
    res.radius = 0.5 * (lo + hi);
    res.worst_param = family_worst(spec, lo, grid, true).argmax_a;
    return res;
}

/// Classical Bohr sum: Moebius-family sup against the sup over all self-maps.
struct BombieriRow {
    double r = 0.0;
    double bombieri = 0.0;
    double moebius_sup = 0.0;
    double moebius_argmax = 0.0;
    bool within = false; ///< moebius_sup <= bombieri + 1e-9
};

inline std::vector<BombieriRow> bombieri_compare(const std::vector<double>& radii)
{
    std::vector<BombieriRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        BombieriRow row;
        row.r = r;
        row.bombieri = bombieri_sup(r);
        const auto [v, a] = detail::grid_max_on_unit(
            [r](double x) { return x >= 1.0 ? 1.0 : moebius_bohr_sum(MoebiusFunction(x), r); }, 10000, true);
        row.moebius_sup = std::max(v, 1.0);
        row.moebius_argmax = v >= 1.0 ? a : 1.0;
        row.within = row.moebius_sup <= row.bombieri + 1e-9;
        rows.push_back(row);
    }
    return rows;
}

} // namespace bohr
