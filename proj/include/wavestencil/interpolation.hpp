#pragma once

// Monomial ordering, stencil node numbering and exact Lagrange bases on
// uniform grids. All polynomials are expressed in grid-scaled coordinates
// (x1/h, x2/h), so no coefficient depends on h.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace wavestencil {

/// Exponent pair of the scaled monomial (x1/h)^a1 (x2/h)^a2.
struct MonomialExponents {
    int a1 = 0;
    int a2 = 0;

    constexpr int degree() const { return a1 + a2; }
    constexpr bool both_even() const { return a1 % 2 == 0 && a2 % 2 == 0; }
    auto operator<=>(const MonomialExponents&) const = default;
};

/// Grid offset of a stencil node relative to the evaluation node, in units of h.
struct StencilOffset {
    int q1 = 0;
    int q2 = 0;

    auto operator<=>(const StencilOffset&) const = default;
};

/// Sparse polynomial in scaled coordinates. Absent keys are zero.
using Polynomial = std::map<MonomialExponents, Rational>;

/// Maps a signed offset component onto a monomial exponent:
/// 0, -1, 1, -2, 2, ... -> 0, 1, 2, 3, 4, ...
constexpr int alpha_of_q(int q) { return q < 0 ? 2 * (-q) - 1 : 2 * q; }

/// Inverse of alpha_of_q.
constexpr int q_of_alpha(int alpha) {
    const int magnitude = (alpha + 1) / 2;
    return alpha % 2 == 0 ? magnitude : -magnitude;
}

/// Ordinal of a monomial: total degree first, then by the difference of the
/// individual degrees (a2 >= a1 before a2 < a1 at equal |a1 - a2|).
/// Bijective onto 1, 2, 3, ...
constexpr std::int64_t ordinal_g(int a1, int a2) {
    const std::int64_t d = std::int64_t{a1} + a2;
    const std::int64_t base = d * (d + 1) / 2;
    return a2 < a1 ? base + (a1 - a2) : base + (a2 - a1 + 1);
}

constexpr std::int64_t ordinal_g(MonomialExponents mu) { return ordinal_g(mu.a1, mu.a2); }

/// First m monomials in ordinal_g order.
inline std::vector<MonomialExponents> monomial_segment(std::size_t m) {
    if (m == 0) throw DomainError("monomial_segment: m must be positive");
    std::vector<MonomialExponents> out;
    // Ordinals of total degree d occupy d(d+1)/2 + 1 .. (d+1)(d+2)/2, so
    // enumerating whole degrees until m members exist is enough.
    for (int d = 0; out.size() < m; ++d)
        for (int a1 = 0; a1 <= d; ++a1) out.push_back({a1, d - a1});
    std::sort(out.begin(), out.end(), [](MonomialExponents x, MonomialExponents y) {
        return ordinal_g(x) < ordinal_g(y);
    });
    out.resize(m);
    return out;
}

constexpr StencilOffset node_of(MonomialExponents mu) { return {q_of_alpha(mu.a1), q_of_alpha(mu.a2)}; }
constexpr MonomialExponents monomial_of(StencilOffset q) { return {alpha_of_q(q.q1), alpha_of_q(q.q2)}; }

/// Stencil node attached to each member of monomial_segment(m), same order.
inline std::vector<StencilOffset> stencil_nodes(std::size_t m) {
    std::vector<StencilOffset> out;
    for (const auto& mu : monomial_segment(m)) out.push_back(node_of(mu));
    return out;
}

namespace detail {
inline BigInt ipow(int base, int exponent) {
    BigInt r = 1;
    for (int i = 0; i < exponent; ++i) r *= base;
    return r;
}
}  // namespace detail

/// Exact value of a scaled monomial at an integer node.
inline Rational evaluate(MonomialExponents mu, StencilOffset node) {
    return Rational(detail::ipow(node.q1, mu.a1) * detail::ipow(node.q2, mu.a2));
}

inline Rational evaluate(const Polynomial& p, StencilOffset node) {
    Rational sum = 0;
    for (const auto& [mu, c] : p) sum += c * evaluate(mu, node);
    return sum;
}

/// Lagrange basis over an ordered monomial set and a matching node set.
/// Row s of coeffs is the expansion of L_s over `monomials`; L_s takes the
/// value 1 at nodes[s] and 0 at every other node.
struct LagrangeBasis {
    std::size_t m = 0;
    std::vector<MonomialExponents> monomials;
    std::vector<StencilOffset> nodes;
    DenseMatrix<Rational> coeffs;
    /// det of the evaluation matrix D[s][r] = monomials[s](nodes[r]).
    Rational determinant;

    Polynomial polynomial(std::size_t s) const {
        Polynomial p;
        for (std::size_t r = 0; r < m; ++r)
            if (coeffs[s][r] != 0) p.emplace(monomials[r], coeffs[s][r]);
        return p;
    }

    /// Basis function attached to a node offset (the two-index notation).
    Polynomial polynomial(StencilOffset node) const {
        const auto it = std::find(nodes.begin(), nodes.end(), node);
        if (it == nodes.end()) return {};
        return polynomial(static_cast<std::size_t>(it - nodes.begin()));
    }
};

inline DenseMatrix<Rational> evaluation_matrix(const std::vector<MonomialExponents>& monomials,
                                               const std::vector<StencilOffset>& nodes) {
    DenseMatrix<Rational> d(monomials.size(), std::vector<Rational>(nodes.size()));
    for (std::size_t s = 0; s < monomials.size(); ++s)
        for (std::size_t r = 0; r < nodes.size(); ++r) d[s][r] = evaluate(monomials[s], nodes[r]);
    return d;
}

/// General form: any monomial set paired with equally many nodes.
/// Throws SingularMatrix when the pair is not unisolvent.
inline LagrangeBasis lagrange_basis(std::vector<MonomialExponents> monomials,
                                    std::vector<StencilOffset> nodes) {
    if (monomials.empty() || monomials.size() != nodes.size())
        throw DomainError("lagrange_basis: need equally many monomials and nodes");
    auto [inverse, det] = invert_exact(evaluation_matrix(monomials, nodes));
    LagrangeBasis basis;
    basis.m = monomials.size();
    basis.monomials = std::move(monomials);
    basis.nodes = std::move(nodes);
    basis.coeffs = std::move(inverse);
    basis.determinant = std::move(det);
    return basis;
}

/// Basis for the first m monomials in ordinal_g order and their nodes.
inline LagrangeBasis lagrange_basis(std::size_t m) {
    return lagrange_basis(monomial_segment(m), stencil_nodes(m));
}

}  // namespace wavestencil
