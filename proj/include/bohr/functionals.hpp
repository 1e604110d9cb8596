#pragma once

// Bohr-type functionals, their worst-case envelopes over self-maps with a
// prescribed |a_0|, and the auxiliary functions used in the proofs.

#include "bohr/lemma_bounds.hpp"
#include "bohr/polynomial.hpp"
#include "bohr/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bohr {

enum class FunctionalKind { Classical, ThmA, ThmB1, ThmB2, Thm1, Thm2, Thm3 };

inline constexpr std::array<FunctionalKind, 7> all_functional_kinds{
    FunctionalKind::Classical, FunctionalKind::ThmA, FunctionalKind::ThmB1, FunctionalKind::ThmB2,
    FunctionalKind::Thm1,      FunctionalKind::Thm2, FunctionalKind::Thm3};

/// What the functional adds in front of the coefficient tail.
enum class LeadTerm {
    CenterModulus,    ///< |a_0|
    CircleMax,        ///< sup_{|z|=r} |f(z)|
    CircleMaxSquared, ///< sup_{|z|=r} |f(z)|^2
};

inline constexpr double sqrt5 = 2.236067977499789696;
inline constexpr double golden_radius = sqrt5 - 2.0;       // sqrt(5) - 2
inline constexpr double golden_area_weight = 2.0 * (sqrt5 - 1.0); // 2 (sqrt(5) - 1)
inline constexpr double classical_area_weight = 16.0 / 9.0;

inline std::string_view to_string(FunctionalKind k)
{
    switch (k) {
    case FunctionalKind::Classical: return "classical";
    case FunctionalKind::ThmA: return "thmA";
    case FunctionalKind::ThmB1: return "thmB1";
    case FunctionalKind::ThmB2: return "thmB2";
    case FunctionalKind::Thm1: return "thm1";
    case FunctionalKind::Thm2: return "thm2";
    case FunctionalKind::Thm3: return "thm3";
    }
    return "?";
}

inline std::optional<FunctionalKind> parse_functional_kind(std::string_view s)
{
    for (auto k : all_functional_kinds)
        if (to_string(k) == s) return k;
    return std::nullopt;
}

/// A Bohr-type functional: lead term + sum_{k>=1}|a_k| r^k
/// + (area_weight + p_weight) S_r/pi + lambda (S_r/pi)^2.
struct FunctionalSpec {
    FunctionalKind kind = FunctionalKind::Classical;
    double lambda = 0.0;
    double p_weight = 0.0;
    double area_weight = 0.0;

    static FunctionalSpec classical() { return {FunctionalKind::Classical, 0.0, 0.0, 0.0}; }
    static FunctionalSpec thm_a(double weight = classical_area_weight)
    {
        return checked({FunctionalKind::ThmA, 0.0, 0.0, weight});
    }
    static FunctionalSpec thm_b1() { return {FunctionalKind::ThmB1, 0.0, 0.0, 0.0}; }
    static FunctionalSpec thm_b2() { return {FunctionalKind::ThmB2, 0.0, 0.0, 0.0}; }
    static FunctionalSpec thm1(double lambda) { return checked({FunctionalKind::Thm1, lambda, 0.0, classical_area_weight}); }
    static FunctionalSpec thm2(double lambda) { return checked({FunctionalKind::Thm2, lambda, 0.0, classical_area_weight}); }
    static FunctionalSpec thm3(double p = golden_area_weight) { return checked({FunctionalKind::Thm3, 0.0, p, 0.0}); }

    double linear_area_weight() const { return area_weight + p_weight; }

    LeadTerm lead() const
    {
        switch (kind) {
        case FunctionalKind::ThmB1:
        case FunctionalKind::Thm3: return LeadTerm::CircleMax;
        case FunctionalKind::ThmB2:
        case FunctionalKind::Thm2: return LeadTerm::CircleMaxSquared;
        default: return LeadTerm::CenterModulus;
        }
    }

    /// The radius up to which the functional is claimed to stay <= 1.
    double radius() const
    {
        return (kind == FunctionalKind::ThmB1 || kind == FunctionalKind::Thm3) ? golden_radius : 1.0 / 3.0;
    }

private:
    static FunctionalSpec checked(FunctionalSpec s)
    {
        if (!(s.lambda >= 0.0 && s.p_weight >= 0.0 && s.area_weight >= 0.0))
            throw std::invalid_argument("FunctionalSpec: weights must be nonnegative");
        return s;
    }
};

inline void require_area_domain(double r, const char* who)
{
    if (!(r >= 0.0 && r <= inv_sqrt2))
        throw std::domain_error(std::string(who) + ": radius must lie in [0, 1/sqrt(2)]");
}

/// Upper estimate of the functional for one series: truncated sums plus all
/// truncation tails. The circle maximum uses a 4096-point grid on |z| = r.
/// Same as eval_functional with max_{|z|=r}|f| (tail included) supplied by the caller.
inline double eval_functional_with_circle_max(const FunctionalSpec& spec, const PowerSeries& s, double r,
                                              double circle_max)
{
    require_area_domain(r, "eval_functional");
    const TailAware sum = bohr_sum(s, r);
    const double tail_sum = std::max(0.0, sum.value - std::abs(s[0])) + sum.tail_bound;
    const double area = area_ratio(s, r).upper();

    double lead = std::abs(s[0]);
    if (spec.lead() == LeadTerm::CircleMax) lead = circle_max;
    if (spec.lead() == LeadTerm::CircleMaxSquared) lead = circle_max * circle_max;
    return lead + tail_sum + spec.linear_area_weight() * area + spec.lambda * area * area;
}

inline double eval_functional(const FunctionalSpec& spec, const PowerSeries& s, double r)
{
    require_area_domain(r, "eval_functional");
    const double m = spec.lead() == LeadTerm::CenterModulus ? 0.0 : circle_max_modulus(s, r).upper();
    return eval_functional_with_circle_max(spec, s, r, m);
}

// ---------------------------------------------------------------------------
// Proof functions

enum class ProofFunctionKind { Phi1, Psi1, Phi2, Psi2 };

/// Phi(t) = base(t) + lambda * lambda_part(t), both with integer coefficients.
struct PhiPolynomials {
    RealPolynomial base;
    RealPolynomial lambda_part;
};

inline const PhiPolynomials& phi_polynomials(ProofFunctionKind kind)
{
    static const PhiPolynomials phi1{RealPolynomial{3078, 1944, -522, -432, 2, 24, 2},
                                     RealPolynomial{-81, -243, -162, 162, 243, 81}};
    static const PhiPolynomials phi2{RealPolynomial{2349, 81, -522, -18, 29, 1},
                                     RealPolynomial{-81, -162, 0, 162, 81}};
    switch (kind) {
    case ProofFunctionKind::Phi1: return phi1;
    case ProofFunctionKind::Phi2: return phi2;
    default: throw std::invalid_argument("phi_polynomials: not a Phi kind");
    }
}

inline bool is_phi(ProofFunctionKind k) { return k == ProofFunctionKind::Phi1 || k == ProofFunctionKind::Phi2; }

namespace detail {

// (1 - t^2)/(9 - t^2); the area bound at r = 1/3 is 9 u^2.
inline double area_ratio_third(double t) { return (1.0 - t * t) / (9.0 - t * t); }

} // namespace detail

inline double proof_function(ProofFunctionKind kind, double t, double lambda)
{
    switch (kind) {
    case ProofFunctionKind::Phi1:
    case ProofFunctionKind::Phi2: {
        const auto& phi = phi_polynomials(kind);
        return phi.base(t) + lambda * phi.lambda_part(t);
    }
    case ProofFunctionKind::Psi1:
    case ProofFunctionKind::Psi2: {
        const double u = detail::area_ratio_third(t);
        const double u2 = u * u;
        double lead = t;
        if (kind == ProofFunctionKind::Psi2) {
            const double w = (1.0 + 3.0 * t) / (3.0 + t);
            lead = w * w;
        }
        return lead + std::sqrt(1.0 - t * t) / std::sqrt(8.0) + 16.0 * u2 + 81.0 * lambda * u2 * u2;
    }
    }
    throw std::invalid_argument("proof_function: unknown kind");
}

/// d^order/dt^order of Phi, order <= 3.
inline double phi_derivative(ProofFunctionKind kind, double t, double lambda, int order)
{
    const auto& phi = phi_polynomials(kind);
    RealPolynomial base = phi.base;
    RealPolynomial lam = phi.lambda_part;
    for (int i = 0; i < order; ++i) {
        base = base.derivative();
        lam = lam.derivative();
    }
    return base(t) + lambda * lam(t);
}

// ---------------------------------------------------------------------------
// Envelopes

/// Value of the lead term for the extremal bound: |a_0| or the Schwarz-Pick D(r), squared if needed.
inline double envelope_lead(LeadTerm lead, double a0, double r)
{
    switch (lead) {
    case LeadTerm::CenterModulus: return a0;
    case LeadTerm::CircleMax: return schwarz_pick_bound(a0, r);
    case LeadTerm::CircleMaxSquared: {
        const double d = schwarz_pick_bound(a0, r);
        return d * d;
    }
    }
    return 0.0;
}

inline double envelope_area_terms(const FunctionalSpec& spec, double a0, double r)
{
    const double area = lemma_b_rhs(a0, r);
    return spec.linear_area_weight() * area + spec.lambda * area * area;
}

/// Worst case of the functional over all self-maps with |a_0| = a0 at radius r.
inline double envelope(const FunctionalSpec& spec, double a0, double r)
{
    require_area_domain(r, "envelope");
    if (!(a0 >= 0.0 && a0 <= 1.0)) throw std::domain_error("envelope: a0 must lie in [0, 1]");
    return envelope_lead(spec.lead(), a0, r) + coeff_tail_bound({a0, r, 1}) + envelope_area_terms(spec, a0, r);
}

/// The a0 >= r formula, r (1-a^2)/(1-ra) for the tail, at any a0. For a real
/// a0 this is exactly the functional of (a0 - z)/(1 - a0 z).
inline double envelope_a_branch(const FunctionalSpec& spec, double a0, double r)
{
    require_area_domain(r, "envelope_a_branch");
    const double tail = (a0 == 1.0) ? 0.0 : r * (1.0 - a0 * a0) / (1.0 - r * a0);
    return envelope_lead(spec.lead(), a0, r) + tail + envelope_area_terms(spec, a0, r);
}

/// The a0 < r formula, r sqrt(1-a^2)/sqrt(1-r^2) for the tail, at any a0.
inline double envelope_b_branch(const FunctionalSpec& spec, double a0, double r)
{
    require_area_domain(r, "envelope_b_branch");
    const double tail = r * std::sqrt(1.0 - a0 * a0) / std::sqrt(1.0 - r * r);
    return envelope_lead(spec.lead(), a0, r) + tail + envelope_area_terms(spec, a0, r);
}

/// d/da of envelope_b_branch.
inline double envelope_b_branch_derivative(const FunctionalSpec& spec, double a, double r)
{
    const double r2 = r * r;
    double lead_d = 1.0;
    if (spec.lead() != LeadTerm::CenterModulus) {
        const double d = (r + a) / (1.0 + r * a);
        const double dd = (1.0 - r2) / ((1.0 + r * a) * (1.0 + r * a));
        lead_d = spec.lead() == LeadTerm::CircleMax ? dd : 2.0 * d * dd;
    }
    const double tail_d = -r * a / (std::sqrt(1.0 - r2) * std::sqrt(1.0 - a * a));
    const double den = 1.0 - a * a * r2;
    const double v = (1.0 - a * a) / den;
    const double vd = -2.0 * a * (1.0 - r2) / (den * den);
    const double area = r2 * v * v;
    const double area_d = 2.0 * r2 * v * vd;
    return lead_d + tail_d + spec.linear_area_weight() * area_d + 2.0 * spec.lambda * area * area_d;
}

/// Majorants of |E_B'| and |E_B''| for the b-branch envelope on a in [0, r].
struct DerivativeBounds {
    double first = 0.0;
    double second = 0.0;
};

inline DerivativeBounds envelope_b_branch_derivative_bounds(const FunctionalSpec& spec, double r)
{
    const double r2 = r * r;
    const double r4 = r2 * r2;
    double lead1 = 1.0, lead2 = 0.0;
    if (spec.lead() != LeadTerm::CenterModulus) {
        const double d_max = 2.0 * r / (1.0 + r2);
        const double d1 = 1.0 - r2;
        const double d2 = 2.0 * r * (1.0 - r2);
        if (spec.lead() == LeadTerm::CircleMax) {
            lead1 = d1;
            lead2 = d2;
        } else {
            lead1 = 2.0 * d_max * d1;
            lead2 = 2.0 * d1 * d1 + 2.0 * d_max * d2;
        }
    }
    const double tail1 = r2 / (1.0 - r2);
    const double tail2 = r / ((1.0 - r2) * (1.0 - r2));
    const double v1 = 2.0 * r * (1.0 - r2) / ((1.0 - r4) * (1.0 - r4));
    const double v2 = 2.0 * (1.0 - r2) * (1.0 + 3.0 * r4) / ((1.0 - r4) * (1.0 - r4) * (1.0 - r4));
    const double area0 = r2;
    const double area1 = 2.0 * r2 * v1;
    const double area2 = 2.0 * r2 * (v1 * v1 + v2);
    const double w = spec.linear_area_weight();
    return {lead1 + tail1 + w * area1 + spec.lambda * 2.0 * area0 * area1,
            lead2 + tail2 + w * area2 + spec.lambda * (2.0 * area1 * area1 + 2.0 * area0 * area2)};
}

/// Leading coefficient c in E(1 - delta) = 1 + c delta + O(delta^2); the
/// family sup exceeds 1 near a = 1 whenever c > 0.
inline double envelope_boundary_slope(const FunctionalSpec& spec, double r)
{
    double lead_d = 1.0;
    if (spec.lead() == LeadTerm::CircleMax) lead_d = (1.0 - r) / (1.0 + r);
    if (spec.lead() == LeadTerm::CircleMaxSquared) lead_d = 2.0 * (1.0 - r) / (1.0 + r);
    return 2.0 * r / (1.0 - r) - lead_d;
}

/// Excess over 1 of |f(r)| + sum|a_k| r^k + (p + eps) S_r/pi for
/// f(z) = (z + a)/(1 + a z) at r = sqrt(5) - 2, p = 2(sqrt(5) - 1), in the
/// factored form (no cancellation near a = 1).
inline double thm3_delta(double a, double eps)
{
    if (!(a >= 0.0 && a < 1.0)) throw std::domain_error("thm3_delta: a must lie in [0, 1)");
    if (!(eps >= 0.0)) throw std::domain_error("thm3_delta: eps must be nonnegative");
    const double c0 = 7.0 * (-9.0 + 4.0 * sqrt5);
    const double c1 = 4.0 * (-47.0 + 21.0 * sqrt5);
    const double c2 = -161.0 + 72.0 * sqrt5;
    const double den = (4.0 * sqrt5 - 9.0) * a * a + 1.0;
    const double one_minus = 1.0 - a;
    const double main = one_minus * one_minus * one_minus * (c0 + c1 * a + c2 * a * a);
    const double one_minus_sq = (1.0 - a * a) * (1.0 - a * a);
    return (main + eps * (9.0 - 4.0 * sqrt5) * one_minus_sq) / (den * den);
}

} // namespace bohr
