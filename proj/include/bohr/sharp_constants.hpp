#pragma once

// Defining polynomials of the sharp constants, certified root isolation, the
// closed-form lambda expressions, and algebraic consistency checks.

#include "bohr/functionals.hpp"
#include "bohr/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohr {

/// psi(t) = -405 + 473 t + 402 t^2 + 38 t^3 + 3 t^4 + t^5; its root in (0,1) is a1.
inline const RealPolynomial& psi_polynomial()
{
    static const RealPolynomial p{-405, 473, 402, 38, 3, 1};
    return p;
}

/// -513 + 910 t + 80 t^2 + 2 t^3 + t^4; its root in (0,1) is a2.
inline const RealPolynomial& thm2_quartic()
{
    static const RealPolynomial p{-513, 910, 80, 2, 1};
    return p;
}

/// Minimal polynomial of lambda1 (leading coefficient negative).
inline const RealPolynomial& lambda1_quintic()
{
    static const RealPolynomial p{285212672LL, 6268596224LL, 37178714880LL, 87178893840LL, 97745285925LL,
                                  -5509980288LL};
    return p;
}

/// Minimal polynomial of lambda2.
inline const RealPolynomial& lambda2_quartic()
{
    static const RealPolynomial p{575930368LL, 4437874624LL, 11353360788LL, 10868034060LL, -703096443LL};
    return p;
}

/// 4(486 - 261a - 324a^2 + 2a^3 + 30a^4 + 3a^5) / (81 (1+a)^3 (3-5a)), for any field T.
template <typename T>
T lambda_thm1_formula(const T& a)
{
    const T num = T(4) * (T(486) - T(261) * a - T(324) * a * a + T(2) * a * a * a + T(30) * a * a * a * a +
                          T(3) * a * a * a * a * a);
    const T one_plus = T(1) + a;
    return num / (T(81) * one_plus * one_plus * one_plus * (T(3) - T(5) * a));
}

/// (-81 + 1044a + 54a^2 - 116a^3 - 5a^4) / (162 (a+1)^2 (2a-1)), for any field T.
template <typename T>
T lambda_thm2_formula(const T& a)
{
    const T num = T(-81) + T(1044) * a + T(54) * a * a - T(116) * a * a * a - T(5) * a * a * a * a;
    const T one_plus = a + T(1);
    return num / (T(162) * one_plus * one_plus * (T(2) * a - T(1)));
}

inline double lambda_thm1(double a)
{
    if (!(a >= 0.0 && a < 0.6)) throw std::domain_error("lambda_thm1: a must lie in [0, 3/5)");
    return lambda_thm1_formula(a);
}

inline double lambda_thm2(double a)
{
    if (!(a > 0.5 && a < 1.0)) throw std::domain_error("lambda_thm2: a must lie in (1/2, 1)");
    return lambda_thm2_formula(a);
}

struct SharpConstants {
    RootResult a1;
    double lambda1 = 0.0;
    RootResult a2;
    double lambda2 = 0.0;
    double r0 = golden_radius;
    double p = golden_area_weight;
};

namespace detail {

// Narrows the root bracket until lambda over the bracket varies by at most tol.
template <typename Lambda>
RootResult isolate_for_lambda(const RealPolynomial& p, Lambda&& lambda, double tol)
{
    double width = tol;
    RootResult root = isolate_unique_root(p, 0.0, 1.0, width);
    while (std::abs(lambda(root.hi) - lambda(root.lo)) > tol && root.hi > root.lo) {
        width = std::min(width, root.hi - root.lo) / 16.0;
        const RootResult next = isolate_unique_root(p, root.lo, root.hi, width);
        if (next.hi - next.lo >= root.hi - root.lo) break; // adjacent doubles
        root = next;
    }
    return root;
}

} // namespace detail

/// Roots to within tol and lambda values to within tol.
inline SharpConstants compute_sharp_constants(double tol = 1e-15)
{
    if (!(tol > 0.0)) throw std::invalid_argument("compute_sharp_constants: tol must be positive");
    SharpConstants c;
    c.a1 = detail::isolate_for_lambda(psi_polynomial(), lambda_thm1, tol);
    c.lambda1 = lambda_thm1(c.a1.value);
    c.a2 = detail::isolate_for_lambda(thm2_quartic(), lambda_thm2, tol);
    c.lambda2 = lambda_thm2(c.a2.value);
    return c;
}

/// Constants at the default tolerance, computed once.
inline const SharpConstants& sharp_constants()
{
    static const SharpConstants c = compute_sharp_constants();
    return c;
}

/// The spec of each functional with its sharp constant.
inline FunctionalSpec sharp_spec(FunctionalKind kind)
{
    switch (kind) {
    case FunctionalKind::Classical: return FunctionalSpec::classical();
    case FunctionalKind::ThmA: return FunctionalSpec::thm_a();
    case FunctionalKind::ThmB1: return FunctionalSpec::thm_b1();
    case FunctionalKind::ThmB2: return FunctionalSpec::thm_b2();
    case FunctionalKind::Thm1: return FunctionalSpec::thm1(sharp_constants().lambda1);
    case FunctionalKind::Thm2: return FunctionalSpec::thm2(sharp_constants().lambda2);
    case FunctionalKind::Thm3: return FunctionalSpec::thm3();
    }
    throw std::invalid_argument("sharp_spec: unknown kind");
}

enum class RemarkPolynomial { Thm1Quintic, Thm2Quartic };

/// |P(lambda)| / sum |c_i| lambda^i for lambda from the root-then-formula
/// pipeline (shifted by lambda_shift), evaluated exactly at the binary64 lambda.
inline double remark_consistency(RemarkPolynomial which, double lambda_shift = 0.0)
{
    const auto& c = sharp_constants();
    const bool first = which == RemarkPolynomial::Thm1Quintic;
    const RealPolynomial& poly = first ? lambda1_quintic() : lambda2_quartic();
    const rational x(((first ? c.lambda1 : c.lambda2) + lambda_shift));
    rational value = poly(x);
    rational scale = 0;
    rational xk = 1;
    for (const auto& coeff : poly.coeffs()) {
        scale += abs(coeff) * xk;
        xk *= x;
    }
    return static_cast<double>(abs(value) / scale);
}

/// The positive root of the lambda minimal polynomial, isolated independently.
inline RootResult remark_lambda_root(RemarkPolynomial which, double lo = 0.0, double hi = 100.0, double tol = 1e-13)
{
    return isolate_unique_root(which == RemarkPolynomial::Thm1Quintic ? lambda1_quintic() : lambda2_quartic(), lo,
                               hi, tol);
}

enum class IdentityKind { Thm1, Thm2 };

/// Both sides of Phi(t) = 2(t^2-9)/(3-5t) psi(t) (resp. (9-t^2)/(2(2t-1)) q(t))
/// with lambda = lambda(t) from the closed form.
template <typename T>
std::pair<T, T> identity_sides(IdentityKind which, const T& t)
{
    const bool first = which == IdentityKind::Thm1;
    const auto& phi = phi_polynomials(first ? ProofFunctionKind::Phi1 : ProofFunctionKind::Phi2);
    auto horner = [&t](const RealPolynomial& p) {
        T acc = T(0);
        const auto& cs = p.coeffs();
        for (std::size_t k = cs.size(); k-- > 0;) acc = acc * t + T(cs[k]);
        return acc;
    };
    if (first) {
        const T lam = lambda_thm1_formula(t);
        const T lhs = horner(phi.base) + lam * horner(phi.lambda_part);
        const T rhs = T(2) * (t * t - T(9)) / (T(3) - T(5) * t) * horner(psi_polynomial());
        return {lhs, rhs};
    }
    const T lam = lambda_thm2_formula(t);
    const T lhs = horner(phi.base) + lam * horner(phi.lambda_part);
    const T rhs = (T(9) - t * t) / (T(2) * (T(2) * t - T(1))) * horner(thm2_quartic());
    return {lhs, rhs};
}

/// Max relative discrepancy of the identity over 64 sample points of the
/// domain where lambda(t) is finite: [0.05, 0.55] for Thm1, [0.52, 0.98] for Thm2.
template <typename T = double>
double identity_check(IdentityKind which)
{
    const bool first = which == IdentityKind::Thm1;
    const T lo = first ? T(1) / T(20) : T(13) / T(25);
    const T width = T(1) / T(2) - (first ? T(0) : T(1) / T(25));
    double worst = 0.0;
    for (int j = 0; j < 64; ++j) {
        const T t = lo + width * T(j) / T(63);
        const auto [lhs, rhs] = identity_sides(which, t);
        const T diff = lhs > rhs ? lhs - rhs : rhs - lhs;
        const double scale = std::max({1.0, std::abs(static_cast<double>(lhs)), std::abs(static_cast<double>(rhs))});
        worst = std::max(worst, static_cast<double>(diff) / scale);
    }
    return worst;
}

} // namespace bohr
