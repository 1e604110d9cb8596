#pragma once

// Truncated power series of analytic self-maps of the unit disk, with
// majorant (Bohr) sums, the area functional, and rigorous truncation tails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bohr {

using complex = std::complex<double>;

inline constexpr std::size_t default_order = 512;
inline constexpr double modulus_slack = 1e-12;

/// Value of a truncated sum together with a bound on everything that was cut off.
struct TailAware {
    double value = 0.0;
    double tail_bound = 0.0;

    double upper() const { return value + tail_bound; }
};

/// Whether coefficients beyond a_N are known to vanish.
enum class Truncation {
    Exact,     ///< f is the polynomial a_0 + ... + a_N z^N
    Truncated, ///< f has an unknown tail, bounded coefficientwise by sup_bound
};

/// Coefficients a_0..a_N of f(z) = sum a_k z^k, plus a known bound on |f| in the disk.
///
/// Every stored coefficient satisfies |a_k| <= sup_bound (Cauchy estimate).
/// Violations up to a relative 1e-12 are clamped back onto the bound, larger
/// ones are rejected. Tail bounds are zero for Exact series.
class PowerSeries {
public:
    PowerSeries() : coeffs_{complex{0.0}} {}

    explicit PowerSeries(std::vector<complex> coeffs, double sup_bound = 1.0,
                         Truncation truncation = Truncation::Exact)
        : coeffs_(std::move(coeffs)), sup_bound_(sup_bound), truncation_(truncation)
    {
        if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: at least one coefficient is required");
        if (!(sup_bound_ > 0.0) || !std::isfinite(sup_bound_))
            throw std::invalid_argument("PowerSeries: sup_bound must be positive and finite");
        const double limit = sup_bound_ * (1.0 + modulus_slack);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            auto& c = coeffs_[k];
            const double m = std::abs(c);
            if (!std::isfinite(m))
                throw std::invalid_argument("PowerSeries: non-finite coefficient at index " + std::to_string(k));
            if (m > limit)
                throw std::invalid_argument("PowerSeries: |a_" + std::to_string(k) + "| = " + std::to_string(m) +
                                            " exceeds the sup bound " + std::to_string(sup_bound_));
            if (m > sup_bound_) c *= sup_bound_ / m;
        }
    }

    PowerSeries(std::initializer_list<complex> coeffs) : PowerSeries(std::vector<complex>(coeffs)) {}

    std::size_t order() const { return coeffs_.size() - 1; }
    double sup_bound() const { return sup_bound_; }
    Truncation truncation() const { return truncation_; }
    bool truncated() const { return truncation_ == Truncation::Truncated; }
    std::span<const complex> coeffs() const { return coeffs_; }
    const complex& operator[](std::size_t k) const { return coeffs_[k]; }

    bool is_zero() const
    {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const complex& c) { return c == complex{0.0}; });
    }

private:
    std::vector<complex> coeffs_;
    double sup_bound_ = 1.0;
    Truncation truncation_ = Truncation::Exact;
};

/// The disk automorphism f(z) = (a - z)/(1 - a z) with real a in [0, 1).
class MoebiusFunction {
public:
    explicit MoebiusFunction(double a) : a_(a)
    {
        if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("MoebiusFunction: a must lie in [0, 1)");
    }

    double a() const { return a_; }

private:
    double a_;
};

namespace detail {

inline void require_radius(double r, const char* who)
{
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error(std::string(who) + ": radius must lie in [0, 1)");
}

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace detail

/// Truncated value sum_{k<=N} a_k z^k; no tail correction.
inline complex eval(const PowerSeries& s, complex z)
{
    if (std::abs(z) > 1.0 + modulus_slack) throw std::domain_error("eval: |z| must not exceed 1");
    const auto c = s.coeffs();
    complex acc{0.0};
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

/// sum |a_k| r^k with tail sup_bound r^{N+1}/(1-r) (zero for exact series).
inline TailAware bohr_sum(const PowerSeries& s, double r)
{
    detail::require_radius(r, "bohr_sum");
    detail::CompensatedSum acc;
    double rk = 1.0;
    for (const auto& c : s.coeffs()) {
        acc.add(std::abs(c) * rk);
        rk *= r;
    }
    return {acc.value(), s.truncated() ? s.sup_bound() * rk / (1.0 - r) : 0.0};
}

/// S_r/pi = sum_{k>=1} k |a_k|^2 r^{2k}; the tail bounds sum_{k>N} k M^2 r^{2k}.
inline TailAware area_ratio(const PowerSeries& s, double r)
{
    detail::require_radius(r, "area_ratio");
    const auto c = s.coeffs();
    const double q = r * r;
    detail::CompensatedSum acc;
    double qk = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) {
        qk *= q;
        acc.add(static_cast<double>(k) * std::norm(c[k]) * qk);
    }
    // sum_{k>=n} k q^k = q^n (n - (n-1) q) / (1-q)^2 with n = N+1.
    const double n = static_cast<double>(c.size());
    const double qn = qk * q;
    const double m2 = s.sup_bound() * s.sup_bound();
    const double tail = s.truncated() ? m2 * qn * (n - (n - 1.0) * q) / ((1.0 - q) * (1.0 - q)) : 0.0;
    return {acc.value(), tail};
}

/// Coefficients of (a - z)/(1 - a z) = a - (1 - a^2) sum_{k>=1} a^{k-1} z^k.
inline PowerSeries moebius_coefficients(const MoebiusFunction& m, std::size_t order = default_order)
{
    const double a = m.a();
    std::vector<complex> c(order + 1);
    c[0] = a;
    double ak = 1.0;
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = -(1.0 - a * a) * ak;
        ak *= a;
    }
    return PowerSeries(std::move(c), 1.0, Truncation::Truncated);
}

inline double moebius_bohr_sum(const MoebiusFunction& m, double r)
{
    detail::require_radius(r, "moebius_bohr_sum");
    const double a = m.a();
    return a + (1.0 - a * a) * r / (1.0 - a * r);
}

inline double moebius_area_ratio(const MoebiusFunction& m, double r)
{
    if (!(r >= 0.0 && r <= std::numbers::sqrt2 / 2.0))
        throw std::domain_error("moebius_area_ratio: radius must lie in [0, 1/sqrt(2)]");
    const double a2 = m.a() * m.a();
    const double den = 1.0 - a2 * r * r;
    return (1.0 - a2) * (1.0 - a2) * r * r / (den * den);
}

/// Boundary sup-norm estimate from an equispaced grid on |z| = 1 - 1e-9.
struct SupNormEstimate {
    double grid_max = 0.0;
    /// Second-order bound on how far the true maximum can sit above grid_max.
    double margin = 0.0;

    double bound() const { return grid_max + margin; }
};

inline SupNormEstimate sup_norm_estimate(const PowerSeries& s, std::size_t boundary_grid = 1024)
{
    if (boundary_grid < 64) throw std::invalid_argument("sup_norm_estimate: need at least 64 boundary points");
    const double rho = 1.0 - 1e-9;
    const auto c = s.coeffs();
    double m0 = 0.0;
    for (std::size_t j = 0; j < boundary_grid; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(boundary_grid);
        m0 = std::max(m0, std::abs(eval(s, std::polar(rho, th))));
    }
    // d^2|f|^2/dtheta^2 <= 2(S1^2 + S0 S2) with S_j = sum k^j |a_k|; |f|^2 is
    // stationary at its maximum, so it exceeds the nearest grid value by at
    // most C h^2 / 8.
    double s0 = 0.0, s1 = 0.0, s2 = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double m = std::abs(c[k]);
        const double kd = static_cast<double>(k);
        s0 += m;
        s1 += kd * m;
        s2 += kd * kd * m;
    }
    const double h = 2.0 * std::numbers::pi / static_cast<double>(boundary_grid);
    const double curvature = 2.0 * (s1 * s1 + s0 * s2);
    const double upper = std::sqrt(m0 * m0 + curvature * h * h / 8.0);
    return {m0, upper - m0};
}

/// max_{|z| = r} |f(z)| over an equispaced grid, with the truncation tail.
///
/// Terms whose majorant sup_bound r^k falls below 1e-20 are folded into the
/// tail instead of being summed.
inline TailAware circle_max_modulus(const PowerSeries& s, double r, std::size_t grid = 4096)
{
    detail::require_radius(r, "circle_max_modulus");
    const auto c = s.coeffs();
    std::size_t used = c.size();
    double rk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k > 0 && s.sup_bound() * rk < 1e-20) {
            used = k;
            break;
        }
        rk *= r;
    }
    double tail = 0.0;
    if (used < c.size() || s.truncated()) {
        // Covers both the folded terms and everything beyond a_N.
        double tail_r = 1.0;
        for (std::size_t k = 0; k < used; ++k) tail_r *= r;
        tail = s.sup_bound() * tail_r / (1.0 - r);
    }

    std::vector<complex> scaled(used);
    double rr = 1.0;
    for (std::size_t k = 0; k < used; ++k) {
        scaled[k] = c[k] * rr;
        rr *= r;
    }
    double best = 0.0;
    for (std::size_t j = 0; j < grid; ++j) {
        const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid);
        const complex w = std::polar(1.0, th);
        complex acc{0.0};
        for (std::size_t k = used; k-- > 0;) acc = acc * w + scaled[k];
        best = std::max(best, std::abs(acc));
    }
    return {best, tail};
}

} // namespace bohr
