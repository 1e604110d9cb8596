#pragma once

// Closed-form right-hand sides of the coefficient, area and Schwarz-Pick
// estimates for self-maps of the disk.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bohr {

/// |a_m| (or |b_0|), the radius, and the gap p of a lacunary series f(z) = z^m g(z^p).
struct TailBoundParams {
    double a_abs = 0.0;
    double r = 0.0;
    int p = 1;

    TailBoundParams() = default;
    TailBoundParams(double a_abs_, double r_, int p_ = 1) : a_abs(a_abs_), r(r_), p(p_)
    {
        if (!(a_abs >= 0.0 && a_abs <= 1.0)) throw std::domain_error("TailBoundParams: a_abs must lie in [0, 1]");
        if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("TailBoundParams: r must lie in [0, 1)");
        if (p < 1) throw std::domain_error("TailBoundParams: p must be >= 1");
    }

    double r_pow_p() const { return std::pow(r, p); }
};

inline constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;

/// Bound on sum_{k>=1} |b_k|^2 r^{pk}: r^p (1-a^2)^2 / (1 - a^2 r^p).
inline double lemma_a_rhs(const TailBoundParams& q)
{
    if (q.a_abs == 1.0) return 0.0;
    const double rp = q.r_pow_p();
    const double a2 = q.a_abs * q.a_abs;
    return rp * (1.0 - a2) * (1.0 - a2) / (1.0 - a2 * rp);
}

/// Bound on S_r/pi: r^2 (1-a^2)^2 / (1 - a^2 r^2)^2, valid for r <= 1/sqrt(2).
inline double lemma_b_rhs(double a_abs, double r)
{
    if (!(r >= 0.0 && r <= inv_sqrt2)) throw std::domain_error("lemma_b_rhs: radius must lie in [0, 1/sqrt(2)]");
    if (!(a_abs >= 0.0 && a_abs <= 1.0)) throw std::domain_error("lemma_b_rhs: a_abs must lie in [0, 1]");
    const double a2 = a_abs * a_abs;
    const double den = 1.0 - a2 * r * r;
    return r * r * (1.0 - a2) * (1.0 - a2) / (den * den);
}

/// Bound on sum_{k>=1} |a_{pk+m}| r^{pk}.
///
/// Branch choice follows the Cauchy-Schwarz argument: a >= r^p admits the
/// substitution rho = a^{-1/p}, otherwise rho = 1/r. The two branches agree at
/// a = r^p. For p = 1 these are the A(r) and B(r) bounds.
inline double coeff_tail_bound(const TailBoundParams& q)
{
    const double a = q.a_abs;
    if (a == 1.0) return 0.0;
    const double rp = q.r_pow_p();
    if (a >= rp) return rp * (1.0 - a * a) / (1.0 - rp * a);
    return rp * std::sqrt(1.0 - a * a) / std::sqrt(1.0 - rp * rp);
}

/// Schwarz-Pick: |f(z)| <= (r + |a_0|)/(1 + r |a_0|) on |z| <= r.
inline double schwarz_pick_bound(double a0_abs, double r)
{
    if (!(a0_abs >= 0.0 && a0_abs <= 1.0)) throw std::domain_error("schwarz_pick_bound: a0_abs must lie in [0, 1]");
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("schwarz_pick_bound: r must lie in [0, 1)");
    return (r + a0_abs) / (1.0 + r * a0_abs);
}

/// sup of the Bohr sum over all self-maps, (3 - sqrt(8(1-r^2)))/r on [1/3, 1/sqrt(2)].
inline double bombieri_sup(double r)
{
    if (!(r >= 1.0 / 3.0 && r <= inv_sqrt2)) throw std::domain_error("bombieri_sup: r must lie in [1/3, 1/sqrt(2)]");
    return (3.0 - std::sqrt(8.0 * (1.0 - r * r))) / r;
}

} // namespace bohr
