#pragma once

// Explicit time-marching schemes assembled from a Lagrange basis.
//
//   first step:  u1[x]   = sum_s first_u[s] u0[x+s] + tau * sum_s first_v[s] v0[x+s]
//   later steps: u{k+1}[x] = sum_s two_step[s] uk[x+s] - u{k-1}[x]
//
// Coefficients are exact polynomials in the Courant number lambda.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "interpolation.hpp"
#include "lambda_poly.hpp"
#include "quadrature.hpp"

namespace wavestencil {

using CoefficientTable = std::map<StencilOffset, LambdaPoly>;

enum class TableRole { FirstU, FirstV, TwoStep };

inline constexpr std::array<TableRole, 3> all_roles{TableRole::FirstU, TableRole::FirstV,
                                                    TableRole::TwoStep};

constexpr std::string_view role_name(TableRole role) {
    switch (role) {
        case TableRole::FirstU: return "first_u";
        case TableRole::FirstV: return "first_v";
        case TableRole::TwoStep: return "two_step";
    }
    return "?";
}

inline TableRole parse_role(std::string_view text) {
    for (TableRole r : all_roles)
        if (role_name(r) == text) return r;
    throw ParseError("unknown table role '" + std::string(text) + "'");
}

struct SchemeSpec {
    std::string name;
    /// Interpolation size the scheme was derived from; 0 for schemes that are
    /// not interpolation-derived (the isotropic nine-point table).
    std::size_t m = 0;
    CoefficientTable first_u;
    /// Multiplies tau * v0.
    CoefficientTable first_v;
    /// Multiplies uk; the -1 on u{k-1} at the centre is implicit.
    CoefficientTable two_step;
    int radius = 0;

    const CoefficientTable& table(TableRole role) const {
        switch (role) {
            case TableRole::FirstU: return first_u;
            case TableRole::FirstV: return first_v;
            case TableRole::TwoStep: return two_step;
        }
        return two_step;
    }
    CoefficientTable& table(TableRole role) {
        return const_cast<CoefficientTable&>(std::as_const(*this).table(role));
    }

    /// Every offset that carries a coefficient in any table.
    std::vector<StencilOffset> offsets() const {
        std::vector<StencilOffset> out;
        for (TableRole r : all_roles)
            for (const auto& [q, poly] : table(r)) out.push_back(q);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void update_radius() {
        radius = 0;
        for (const auto& q : offsets()) radius = std::max({radius, std::abs(q.q1), std::abs(q.q2)});
    }

    friend bool operator==(const SchemeSpec&, const SchemeSpec&) = default;
};

inline LambdaPoly table_sum(const CoefficientTable& t) {
    LambdaPoly sum;
    for (const auto& [q, poly] : t) sum += poly;
    return sum;
}

namespace detail {
inline void set_if_nonzero(CoefficientTable& t, StencilOffset q, LambdaPoly p) {
    if (p.is_zero())
        t.erase(q);
    else
        t[q] = std::move(p);
}
}  // namespace detail

/// Applies A and B/tau to every basis function of lagrange_basis(m). Nodes
/// whose A and B values are both exactly zero drop out of the stencil.
inline SchemeSpec generate_scheme(std::size_t m) {
    const LagrangeBasis basis = lagrange_basis(m);
    SchemeSpec spec;
    spec.name = "poisson-m" + std::to_string(m);
    spec.m = m;
    for (std::size_t s = 0; s < basis.m; ++s) {
        const Polynomial phi = basis.polynomial(s);
        const StencilOffset q = basis.nodes[s];
        const LambdaPoly a = a_on_polynomial(phi);
        const LambdaPoly b = b_on_polynomial(phi);
        if (a.is_zero() && b.is_zero()) continue;
        detail::set_if_nonzero(spec.first_u, q, a);
        detail::set_if_nonzero(spec.first_v, q, b);
        detail::set_if_nonzero(spec.two_step, q, a * Rational(2));
    }
    spec.update_radius();
    return spec;
}

/// Replaces the v-part of the first step with the centre-only table
/// (u1 = A u0 + tau v0), i.e. the central-difference treatment of v0.
inline SchemeSpec conventional_first_step(SchemeSpec spec) {
    spec.first_v.clear();
    spec.first_v[{0, 0}] = LambdaPoly(Rational(1));
    spec.update_radius();
    return spec;
}

/// Nine-point scheme built on the isotropic discrete Laplacian
/// (2/3 on axis neighbours, 1/6 on corners), with the conventional first step.
inline SchemeSpec isotropic_nine_point() {
    SchemeSpec spec;
    spec.name = "isotropic9";
    const LambdaPoly axis = LambdaPoly::monomial(2, Rational(2, 3));
    const LambdaPoly corner = LambdaPoly::monomial(2, Rational(1, 6));
    for (StencilOffset q : {StencilOffset{1, 0}, {0, 1}, {-1, 0}, {0, -1}}) spec.two_step[q] = axis;
    for (StencilOffset q : {StencilOffset{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}) spec.two_step[q] = corner;
    spec.two_step[{0, 0}] = LambdaPoly(Rational(2)) - axis * Rational(4) - corner * Rational(4);
    for (const auto& [q, poly] : spec.two_step) spec.first_u[q] = poly * Rational(1, 2);
    return conventional_first_step(std::move(spec));
}

inline const std::array<std::string_view, 6>& scheme_names() {
    static const std::array<std::string_view, 6> names{"P5", "C5", "P9", "C9", "P13", "C13"};
    return names;
}

/// P = Poisson-derived first step, C = conventional first step.
/// C9 also swaps the two-step table for the isotropic one.
inline SchemeSpec named_scheme(std::string_view name) {
    SchemeSpec spec;
    if (name == "P5")
        spec = generate_scheme(6);
    else if (name == "C5")
        spec = conventional_first_step(generate_scheme(6));
    else if (name == "P9")
        spec = generate_scheme(11);
    else if (name == "C9")
        spec = isotropic_nine_point();
    else if (name == "P13")
        spec = generate_scheme(15);
    else if (name == "C13")
        spec = conventional_first_step(generate_scheme(15));
    else
        throw UnknownScheme(std::string(name));
    spec.name = std::string(name);
    return spec;
}

// ---------------------------------------------------------------------------
// Plain-text table format
//
//   # scheme: P5
//   # m: 6
//   <q1> <q2> <role> <power>:<num>[/<den>] ...
//
// Lines are grouped by role (first_u, first_v, two_step), offsets ascending.

inline void write_scheme_table(std::ostream& out, const SchemeSpec& spec) {
    out << "# scheme: " << spec.name << '\n';
    out << "# m: " << spec.m << '\n';
    out << "# radius: " << spec.radius << '\n';
    for (TableRole role : all_roles)
        for (const auto& [q, poly] : spec.table(role))
            out << q.q1 << ' ' << q.q2 << ' ' << role_name(role) << ' ' << to_string(poly) << '\n';
}

inline std::string to_string(const SchemeSpec& spec) {
    std::ostringstream out;
    write_scheme_table(out, spec);
    return out.str();
}

inline SchemeSpec read_scheme_table(std::istream& in) {
    SchemeSpec spec;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream header(line.substr(1));
            std::string key, value;
            header >> key >> value;
            if (key == "scheme:") spec.name = value;
            if (key == "m:") spec.m = static_cast<std::size_t>(std::stoul(value));
            continue;
        }
        std::istringstream fields(line);
        StencilOffset q;
        std::string role;
        if (!(fields >> q.q1 >> q.q2 >> role)) throw ParseError("malformed table line '" + line + "'");
        LambdaPoly poly;
        std::string token;
        while (fields >> token) parse_lambda_term(token, poly);
        detail::set_if_nonzero(spec.table(parse_role(role)), q, std::move(poly));
    }
    spec.update_radius();
    return spec;
}

inline SchemeSpec parse_scheme_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_scheme_table(in);
}

}  // namespace wavestencil
