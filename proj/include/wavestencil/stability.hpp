#pragma once

// von Neumann analysis of the two-step update u{k+1} = 2 A uk - u{k-1}.
// For a plane wave exp(i(q1 th1 + q2 th2)) the operator A multiplies by
//   a(th) = 1/2 sum_s two_step[s](lambda) cos(q1 th1 + q2 th2),
// and the recurrence g^2 - 2 a g + 1 = 0 has |g| <= 1 iff |a| <= 1.

#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scheme.hpp"

namespace wavestencil {

struct SymbolSample {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double value = 0.0;
};

inline double symbol(const SchemeSpec& spec, double lambda, double theta1, double theta2) {
    double sum = 0.0;
    for (const auto& [q, poly] : spec.two_step) sum += poly(lambda) * std::cos(q.q1 * theta1 + q.q2 * theta2);
    return 0.5 * sum;
}

/// Imaginary part of the symbol; vanishes for point-symmetric tables.
inline double symbol_imag(const SchemeSpec& spec, double lambda, double theta1, double theta2) {
    double sum = 0.0;
    for (const auto& [q, poly] : spec.two_step) sum += poly(lambda) * std::sin(q.q1 * theta1 + q.q2 * theta2);
    return 0.5 * sum;
}

struct SymbolExtrema {
    SymbolSample min;
    SymbolSample max;
};

/// Symbol sampled on a uniform res x res grid of [0, 2 pi)^2, split by
/// powers of lambda so that re-evaluating at a new lambda is cheap.
class SymbolGrid {
public:
    static constexpr std::size_t default_resolution = 512;

    explicit SymbolGrid(const SchemeSpec& spec, std::size_t resolution = default_resolution)
        : res_(resolution) {
        const double step = 2.0 * std::numbers::pi / static_cast<double>(res_);
        for (const auto& [q, poly] : spec.two_step) {
            OffsetTerm term{q, {}};
            for (const auto& [power, c] : poly.terms()) term.coeffs.emplace_back(power, to_double(c));
            terms_.push_back(std::move(term));
            for (const auto& [power, c] : poly.terms()) {
                auto& field = by_power_[power];
                if (field.empty()) field.assign(res_ * res_, 0.0);
            }
            for (std::size_t i = 0; i < res_; ++i) {
                for (std::size_t j = 0; j < res_; ++j) {
                    const double cs = 0.5 * std::cos(q.q1 * (step * i) + q.q2 * (step * j));
                    for (const auto& [power, c] : poly.terms()) by_power_[power][i * res_ + j] += to_double(c) * cs;
                }
            }
        }
    }

    std::size_t resolution() const { return res_; }

    /// Same value as symbol(), with the coefficients already in double.
    double evaluate(double lambda, double theta1, double theta2) const {
        double sum = 0.0;
        for (const auto& t : terms_) {
            double c = 0.0;
            for (const auto& [power, value] : t.coeffs) c += value * std::pow(lambda, power);
            sum += c * std::cos(t.offset.q1 * theta1 + t.offset.q2 * theta2);
        }
        return 0.5 * sum;
    }

    /// Grid extrema followed by coordinate descent on the exact symbol
    /// around each grid extremum, to catch extrema between grid points.
    SymbolExtrema extrema(double lambda) const {
        std::vector<double> weights;
        std::vector<const std::vector<double>*> fields;
        for (const auto& [power, field] : by_power_) {
            weights.push_back(std::pow(lambda, power));
            fields.push_back(&field);
        }
        const double step = 2.0 * std::numbers::pi / static_cast<double>(res_);
        std::size_t imin = 0, imax = 0;
        double vmin = INFINITY, vmax = -INFINITY;
        for (std::size_t g = 0; g < res_ * res_; ++g) {
            double v = 0.0;
            for (std::size_t k = 0; k < fields.size(); ++k) v += weights[k] * (*fields[k])[g];
            if (v < vmin) {
                vmin = v;
                imin = g;
            }
            if (v > vmax) {
                vmax = v;
                imax = g;
            }
        }
        auto at = [&](std::size_t g) {
            return SymbolSample{step * static_cast<double>(g / res_), step * static_cast<double>(g % res_), 0.0};
        };
        SymbolSample lo = at(imin), hi = at(imax);
        lo.value = vmin;
        hi.value = vmax;
        return {refine(lo, lambda, step, -1.0), refine(hi, lambda, step, 1.0)};
    }

private:
    // sign = -1 descends, +1 ascends.
    SymbolSample refine(SymbolSample start, double lambda, double step, double sign) const {
        SymbolSample best = start;
        best.value = evaluate(lambda, best.theta1, best.theta2);
        double h = step;
        while (h > 1e-10) {
            bool moved = false;
            for (auto [d1, d2] : {std::pair{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}}) {
                const double v = evaluate(lambda, best.theta1 + d1, best.theta2 + d2);
                if (sign * (v - best.value) > 0.0) {
                    best = {best.theta1 + d1, best.theta2 + d2, v};
                    moved = true;
                }
            }
            if (!moved) h *= 0.5;
        }
        return best;
    }

    struct OffsetTerm {
        StencilOffset offset;
        std::vector<std::pair<int, double>> coeffs;
    };

    std::size_t res_;
    std::vector<OffsetTerm> terms_;
    std::map<int, std::vector<double>> by_power_;
};

inline constexpr double symbol_slack = 1e-12;

struct StabilityCheck {
    bool stable = false;
    /// |a| reaches 1 away from the zero mode: the amplification polynomial
    /// has a double root there, so growth is at most linear in k. Reported,
    /// not treated as unstable.
    bool marginal = false;
    SymbolExtrema extrema;
};

inline StabilityCheck check_stability(const SymbolGrid& grid, double lambda) {
    StabilityCheck out;
    out.extrema = grid.extrema(lambda);
    out.stable = out.extrema.min.value >= -1.0 - symbol_slack && out.extrema.max.value <= 1.0 + symbol_slack;
    const auto& mn = out.extrema.min;
    const auto& mx = out.extrema.max;
    const bool max_off_origin = std::abs(std::sin(mx.theta1 / 2)) + std::abs(std::sin(mx.theta2 / 2)) > 1e-6;
    out.marginal = std::abs(mn.value + 1.0) <= 1e-9 || (max_off_origin && std::abs(mx.value - 1.0) <= 1e-9);
    return out;
}

inline StabilityCheck check_stability(const SchemeSpec& spec, double lambda) {
    return check_stability(SymbolGrid(spec), lambda);
}

/// Largest lambda in (0, 2] (to within tol) for which |a| <= 1 everywhere,
/// found by bisection. Throws NeverStable if lambda = tol already fails.
inline double lambda_max(const SchemeSpec& spec, double tol = 1e-7) {
    if (!(tol > 0.0)) throw DomainError("lambda_max: tol must be positive");
    const SymbolGrid grid(spec);
    double lo = tol, hi = 2.0;
    if (!check_stability(grid, lo).stable)
        throw NeverStable("scheme '" + spec.name + "' violates the von Neumann bound even at lambda = tol");
    if (check_stability(grid, hi).stable) return hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (check_stability(grid, mid).stable ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace wavestencil
