#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace wavestencil {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Inverse of to_string. Accepts "p" or "p/q" with optional leading sign.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw ParseError("bad rational '" + std::string(text) + "'");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9') throw ParseError("bad rational '" + std::string(text) + "'");
        return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den <= 0) throw ParseError("non-positive denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

template <typename Field>
using DenseMatrix = std::vector<std::vector<Field>>;

template <typename Field>
struct ExactInverse {
    DenseMatrix<Field> inverse;
    Field determinant;
};

/// Gauss-Jordan inversion over an exact field. Pivoting only needs a
/// nonzero entry, so no magnitude comparisons are made and the zero test is
/// exact. Throws SingularMatrix when the determinant is zero.
template <typename Field>
ExactInverse<Field> invert_exact(DenseMatrix<Field> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("invert_exact: matrix is not square");

    DenseMatrix<Field> inv(n, std::vector<Field>(n, Field(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Field(1);

    Field det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularMatrix("interpolation matrix is singular (det = 0)");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(inv[pivot], inv[col]);
            det = -det;
        }
        const Field p = a[col][col];
        det *= p;
        for (std::size_t k = 0; k < n; ++k) {
            a[col][k] /= p;
            inv[col][k] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Field f = a[r][col];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= f * a[col][k];
                inv[r][k] -= f * inv[col][k];
            }
        }
    }
    return {std::move(inv), det};
}

}  // namespace wavestencil
