#pragma once

// Exact values of the disc-averaging operators used by the first-step and
// two-step procedures, plus a numerical quadrature oracle for them.
//
// For f a function of scaled coordinates and lambda = c*tau/h:
//   A f = 1/(2 pi) Int_{|z|<1} [f(lambda z) + lambda z . grad f(lambda z)] / sqrt(1 - |z|^2) dz
//   B f = tau/(2 pi) Int_{|z|<1} f(lambda z) / sqrt(1 - |z|^2) dz
// B is carried as B/tau so that both are pure polynomials in lambda.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "interpolation.hpp"
#include "lambda_poly.hpp"

namespace wavestencil {

/// k!! with (-1)!! = 0!! = 1.
inline BigInt double_factorial(int k) {
    if (k < -1) throw DomainError("double_factorial: k must be >= -1");
    BigInt r = 1;
    for (int i = k; i > 1; i -= 2) r *= i;
    return r;
}

/// Zero unless both exponents are even; otherwise
/// (a1-1)!! (a2-1)!! / (a1+a2-1)!! * lambda^(a1+a2).
inline LambdaPoly a_on_monomial(MonomialExponents mu) {
    if (!mu.both_even()) return {};
    const Rational c(double_factorial(mu.a1 - 1) * double_factorial(mu.a2 - 1),
                     double_factorial(mu.a1 + mu.a2 - 1));
    return LambdaPoly::monomial(mu.degree(), c);
}

/// B applied to the monomial, divided by tau.
inline LambdaPoly b_on_monomial(MonomialExponents mu) {
    return a_on_monomial(mu) * Rational(1, mu.degree() + 1);
}

inline LambdaPoly a_on_polynomial(const Polynomial& p) {
    LambdaPoly out;
    for (const auto& [mu, c] : p) out += a_on_monomial(mu) * c;
    return out;
}

inline LambdaPoly b_on_polynomial(const Polynomial& p) {
    LambdaPoly out;
    for (const auto& [mu, c] : p) out += b_on_monomial(mu) * c;
    return out;
}

// ---------------------------------------------------------------------------
// Numerical oracle

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
inline QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be positive");
    // Returns {P_n(x), P_n'(x)}.
    auto legendre = [n](double x) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        if (n == 1) p0 = 1.0;
        return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
    };
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

enum class DiscOperator { A, BOverTau };

namespace detail {

inline double real_pow(double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

// Tensor Gauss rule in (phi, theta) after z = sin(phi) (cos theta, sin theta).
// The Jacobian r dr dtheta / sqrt(1 - r^2) becomes sin(phi) dphi dtheta.
inline double disc_integral(MonomialExponents mu, double lambda, DiscOperator op, int points) {
    const QuadratureRule rule = gauss_legendre(points);
    const double half_pi = std::numbers::pi / 2.0;
    const double two_pi = 2.0 * std::numbers::pi;
    double total = 0.0;
    for (int i = 0; i < points; ++i) {
        const double phi = half_pi * 0.5 * (rule.nodes[i] + 1.0);
        const double wphi = half_pi * 0.5 * rule.weights[i];
        const double r = std::sin(phi);
        double inner = 0.0;
        for (int j = 0; j < points; ++j) {
            const double theta = two_pi * 0.5 * (rule.nodes[j] + 1.0);
            const double wtheta = two_pi * 0.5 * rule.weights[j];
            const double z1 = r * std::cos(theta);
            const double z2 = r * std::sin(theta);
            const double y1 = lambda * z1;
            const double y2 = lambda * z2;
            double f = real_pow(y1, mu.a1) * real_pow(y2, mu.a2);
            if (op == DiscOperator::A) {
                const double df1 = mu.a1 > 0 ? mu.a1 * real_pow(y1, mu.a1 - 1) * real_pow(y2, mu.a2) : 0.0;
                const double df2 = mu.a2 > 0 ? mu.a2 * real_pow(y1, mu.a1) * real_pow(y2, mu.a2 - 1) : 0.0;
                f += lambda * (z1 * df1 + z2 * df2);
            }
            inner += wtheta * f;
        }
        total += wphi * std::sin(phi) * inner;
    }
    return total / two_pi;
}

}  // namespace detail

/// Numerical value of A (or B/tau) on a scaled monomial. Starts from a
/// 64-point rule per axis and doubles until successive results agree to 1e-13.
inline double quad_oracle(MonomialExponents mu, double lambda, DiscOperator op = DiscOperator::A) {
    if (!(lambda > 0.0)) throw DomainError("quad_oracle: lambda must be positive");
    int points = 64;
    double previous = detail::disc_integral(mu, lambda, op, points);
    while (points < 1024) {
        points *= 2;
        const double current = detail::disc_integral(mu, lambda, op, points);
        if (std::abs(current - previous) <= 1e-13) return current;
        previous = current;
    }
    return previous;
}

inline double quad_oracle_b(MonomialExponents mu, double lambda) {
    return quad_oracle(mu, lambda, DiscOperator::BOverTau);
}

}  // namespace wavestencil
