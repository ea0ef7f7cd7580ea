#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "rational.hpp"

namespace wavestencil {

/// Polynomial in the Courant number with exact rational coefficients.
/// Zero coefficients are never stored, so the zero polynomial is empty.
class LambdaPoly {
public:
    using Terms = std::map<int, Rational>;

    LambdaPoly() = default;
    LambdaPoly(const Rational& constant) { add_term(0, constant); }  // NOLINT(implicit)

    static LambdaPoly monomial(int power, const Rational& coeff) {
        LambdaPoly p;
        p.add_term(power, coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int power) const {
        const auto it = terms_.find(power);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    bool only_even_powers() const {
        for (const auto& [power, c] : terms_)
            if (power % 2 != 0) return false;
        return true;
    }

    void add_term(int power, const Rational& coeff) {
        if (power < 0) throw DomainError("LambdaPoly: negative power");
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(power, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    double operator()(double lambda) const {
        double sum = 0.0;
        for (const auto& [power, c] : terms_) sum += to_double(c) * std::pow(lambda, power);
        return sum;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        for (const auto& [power, c] : o.terms_) add_term(power, c);
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        for (const auto& [power, c] : o.terms_) add_term(power, -c);
        return *this;
    }
    LambdaPoly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [power, c] : terms_) c *= s;
        return *this;
    }

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& s) { return a *= s; }
    friend LambdaPoly operator*(const Rational& s, LambdaPoly a) { return a *= s; }
    friend LambdaPoly operator-(LambdaPoly a) { return a *= Rational(-1); }

    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        LambdaPoly out;
        for (const auto& [pa, ca] : a.terms_)
            for (const auto& [pb, cb] : b.terms_) out.add_term(pa + pb, ca * cb);
        return out;
    }

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    Terms terms_;
};

/// Space-separated "power:p/q" pairs in increasing power, e.g. "2:-1/12 4:1/12".
/// The zero polynomial prints as "0:0".
inline std::string to_string(const LambdaPoly& p) {
    if (p.is_zero()) return "0:0";
    std::string out;
    for (const auto& [power, c] : p.terms()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(power) + ":" + to_string(c);
    }
    return out;
}

/// Parses a single "power:p/q" token and adds it to `into`.
inline void parse_lambda_term(std::string_view token, LambdaPoly& into) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw ParseError("expected power:coefficient, got '" + std::string(token) + "'");
    int power = 0;
    for (char ch : token.substr(0, colon)) {
        if (ch < '0' || ch > '9') throw ParseError("bad power in '" + std::string(token) + "'");
        power = power * 10 + (ch - '0');
    }
    into.add_term(power, parse_rational(token.substr(colon + 1)));
}

inline LambdaPoly parse_lambda_poly(std::string_view text) {
    LambdaPoly p;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) parse_lambda_term(token, p);
    return p;
}

}  // namespace wavestencil
