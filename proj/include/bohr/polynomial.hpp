#pragma once

// Exact-rational univariate polynomials with Sturm-sequence root counting.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bohr {

using rational = boost::multiprecision::cpp_rational;

/// Polynomial with exact rational coefficients (index = degree).
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<rational> coeffs) : coeffs_(std::move(coeffs))
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
        if (coeffs_.empty()) throw std::invalid_argument("RealPolynomial: the zero polynomial has no degree");
        approx_.reserve(coeffs_.size());
        for (const auto& c : coeffs_) approx_.push_back(static_cast<double>(c));
    }

    RealPolynomial(std::initializer_list<long long> coeffs)
        : RealPolynomial(std::vector<rational>(coeffs.begin(), coeffs.end()))
    {
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<rational>& coeffs() const { return coeffs_; }
    const std::vector<double>& approx_coeffs() const { return approx_; }
    const rational& leading() const { return coeffs_.back(); }

    rational operator()(const rational& x) const
    {
        rational acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    double operator()(double x) const
    {
        double acc = 0.0;
        for (std::size_t k = approx_.size(); k-- > 0;) acc = acc * x + approx_[k];
        return acc;
    }

    /// Sign of p(x) for a binary64 x, decided in exact arithmetic.
    int sign_at(double x) const
    {
        const rational v = (*this)(rational(x));
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }

    RealPolynomial derivative() const
    {
        if (coeffs_.size() == 1) return RealPolynomial({rational(0)}, zero_tag{});
        std::vector<rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long long>(k);
        return RealPolynomial(std::move(d));
    }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

    /// Remainder of Euclidean division by a nonzero divisor; may be zero.
    RealPolynomial remainder(const RealPolynomial& divisor) const
    {
        if (divisor.is_zero()) throw std::invalid_argument("RealPolynomial::remainder: division by zero");
        std::vector<rational> rem = coeffs_;
        const std::size_t dn = divisor.coeffs_.size();
        while (rem.size() >= dn) {
            const rational factor = rem.back() / divisor.leading();
            const std::size_t shift = rem.size() - dn;
            for (std::size_t k = 0; k < dn; ++k) rem[shift + k] -= factor * divisor.coeffs_[k];
            rem.pop_back();
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
        }
        if (rem.empty()) return RealPolynomial({rational(0)}, zero_tag{});
        return RealPolynomial(std::move(rem));
    }

    RealPolynomial operator-() const
    {
        std::vector<rational> c = coeffs_;
        for (auto& x : c) x = -x;
        return RealPolynomial(std::move(c), zero_tag{});
    }

private:
    struct zero_tag {};
    // Keeps the zero polynomial representable for intermediate results.
    RealPolynomial(std::vector<rational> coeffs, zero_tag) : coeffs_(std::move(coeffs))
    {
        for (const auto& c : coeffs_) approx_.push_back(static_cast<double>(c));
    }

    std::vector<rational> coeffs_;
    std::vector<double> approx_;
};

/// Canonical Sturm chain p, p', -rem(p, p'), ... ending at the last nonzero remainder.
inline std::vector<RealPolynomial> sturm_sequence(const RealPolynomial& p)
{
    std::vector<RealPolynomial> seq{p};
    if (p.degree() == 0) return seq;
    seq.push_back(p.derivative());
    while (true) {
        const auto& a = seq[seq.size() - 2];
        const auto& b = seq.back();
        if (b.degree() == 0) break;
        RealPolynomial r = a.remainder(b);
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    return seq;
}

inline int sign_variations(const std::vector<RealPolynomial>& seq, const rational& x)
{
    int changes = 0;
    int last = 0;
    for (const auto& q : seq) {
        const rational v = q(x);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline int count_roots(const RealPolynomial& p, const rational& lo, const rational& hi)
{
    if (!(lo < hi)) throw std::invalid_argument("count_roots: need lo < hi");
    const auto seq = sturm_sequence(p);
    return sign_variations(seq, lo) - sign_variations(seq, hi);
}

struct RootResult {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    int sign_change_count = 0;
};

class root_isolation_error : public std::runtime_error {
public:
    root_isolation_error(const std::string& what, int count) : std::runtime_error(what), count_(count) {}
    int count() const { return count_; }

private:
    int count_;
};

/// Certifies via Sturm that p has exactly one root in (lo, hi), then bisects
/// with exact sign evaluation until the bracket is no wider than tol.
inline RootResult isolate_unique_root(const RealPolynomial& p, double lo, double hi, double tol = 1e-14)
{
    if (!(lo < hi)) throw std::invalid_argument("isolate_unique_root: need lo < hi");
    if (!(tol > 0.0)) throw std::invalid_argument("isolate_unique_root: tol must be positive");
    int count = count_roots(p, rational(lo), rational(hi));
    if (p.sign_at(hi) == 0) --count; // open interval
    if (count == 0) throw root_isolation_error("no root in the search interval", 0);
    if (count != 1)
        throw root_isolation_error("uniqueness failed: " + std::to_string(count) + " roots in the search interval",
                                   count);

    int s_lo = p.sign_at(lo);
    int s_hi = p.sign_at(hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
        throw root_isolation_error("no sign change across the search interval (even-multiplicity root)", count);

    while (hi - lo > tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const int s = p.sign_at(mid);
        if (s == 0) return {mid, mid, mid, count};
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo + 0.5 * (hi - lo), lo, hi, count};
}

} // namespace bohr
