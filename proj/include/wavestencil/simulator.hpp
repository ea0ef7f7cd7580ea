#pragma once

// Time marching on the unit square with an (n+1) x (n+1) node grid, h = 1/n.

#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "scheme.hpp"
#include "stability.hpp"

namespace wavestencil {

enum class BoundaryCondition { Dirichlet, Periodic };

constexpr std::string_view to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "periodic";
}

inline BoundaryCondition parse_boundary(std::string_view text) {
    if (text == "dirichlet") return BoundaryCondition::Dirichlet;
    if (text == "periodic") return BoundaryCondition::Periodic;
    throw DomainError("unknown boundary condition '" + std::string(text) + "'");
}

using SpaceField = std::function<double(double x1, double x2)>;
using SpaceTimeField = std::function<double(double x1, double x2, double t)>;

/// Node values u(i h, j h) for 0 <= i, j <= n, stored row-major in i.
class Grid2D {
public:
    explicit Grid2D(std::size_t n) : n_(n), values_((n + 1) * (n + 1), 0.0) {
        if (n < 2) throw DomainError("Grid2D: n must be at least 2");
    }

    static Grid2D sample(std::size_t n, const SpaceField& f) {
        Grid2D g(n);
        const double h = g.h();
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) g(i, j) = f(i * h, j * h);
        return g;
    }

    std::size_t n() const { return n_; }
    double h() const { return 1.0 / static_cast<double>(n_); }

    double& operator()(std::size_t i, std::size_t j) { return values_[i * (n_ + 1) + j]; }
    double operator()(std::size_t i, std::size_t j) const { return values_[i * (n_ + 1) + j]; }

    std::span<const double> values() const { return values_; }
    std::span<double> values() { return values_; }

    void zero_boundary() {
        for (std::size_t k = 0; k <= n_; ++k) {
            (*this)(0, k) = 0.0;
            (*this)(n_, k) = 0.0;
            (*this)(k, 0) = 0.0;
            (*this)(k, n_) = 0.0;
        }
    }

    /// Copies row/column 0 onto row/column n (periodic alias nodes).
    void sync_periodic_alias() {
        for (std::size_t k = 0; k <= n_; ++k) {
            (*this)(n_, k) = (*this)(0, k);
            (*this)(k, n_) = (*this)(k, 0);
        }
    }

    friend bool operator==(const Grid2D&, const Grid2D&) = default;

private:
    std::size_t n_;
    std::vector<double> values_;
};

inline double standing_wave_frequency(double c = 1.0) { return 2.0 * std::numbers::sqrt2 * std::numbers::pi * c; }

/// sin(2 pi x1) sin(2 pi x2) sin(2 sqrt(2) pi c t).
inline double exact_standing_wave(double x1, double x2, double t, double c = 1.0) {
    const double two_pi = 2.0 * std::numbers::pi;
    return std::sin(two_pi * x1) * std::sin(two_pi * x2) * std::sin(standing_wave_frequency(c) * t);
}

/// Time derivative of the standing wave at t = 0.
inline double standing_wave_velocity(double x1, double x2, double c = 1.0) {
    const double two_pi = 2.0 * std::numbers::pi;
    return standing_wave_frequency(c) * std::sin(two_pi * x1) * std::sin(two_pi * x2);
}

struct StencilTerm {
    int q1 = 0;
    int q2 = 0;
    double coeff = 0.0;
};

/// Coefficient table evaluated at a fixed Courant number.
inline std::vector<StencilTerm> evaluate_table(const CoefficientTable& table, double lambda) {
    std::vector<StencilTerm> out;
    out.reserve(table.size());
    for (const auto& [q, poly] : table) out.push_back({q.q1, q.q2, poly(lambda)});
    return out;
}

namespace detail {

inline void require_supported(const SchemeSpec& spec, BoundaryCondition bc) {
    if (bc == BoundaryCondition::Dirichlet && spec.radius > 1)
        throw RadiusUnsupported("scheme '" + spec.name + "' has radius " + std::to_string(spec.radius) +
                                "; Dirichlet boundaries support radius 1 only");
}

inline void require_same_shape(const Grid2D& a, const Grid2D& b) {
    if (a.n() != b.n()) throw DomainError("grid shapes differ");
}

// out(i, j) += scale * sum_s c_s f(i + q1, j + q2) over the updated nodes.
inline void accumulate_stencil(Grid2D& out, const Grid2D& f, std::span<const StencilTerm> terms, double scale,
                               BoundaryCondition bc) {
    const auto n = static_cast<long>(f.n());
    if (bc == BoundaryCondition::Dirichlet) {
        for (long i = 1; i < n; ++i)
            for (long j = 1; j < n; ++j) {
                double sum = 0.0;
                for (const auto& t : terms) sum += t.coeff * f(i + t.q1, j + t.q2);
                out(i, j) += scale * sum;
            }
        return;
    }
    auto wrap = [n](long k) { return static_cast<std::size_t>(((k % n) + n) % n); };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            double sum = 0.0;
            for (const auto& t : terms) sum += t.coeff * f(wrap(i + t.q1), wrap(j + t.q2));
            out(i, j) += scale * sum;
        }
}

inline void finish_boundary(Grid2D& g, BoundaryCondition bc) {
    if (bc == BoundaryCondition::Dirichlet)
        g.zero_boundary();
    else
        g.sync_periodic_alias();
}

}  // namespace detail

/// u1 = sum_s first_u[s] u0[. + s] + tau * sum_s first_v[s] v0[. + s].
inline Grid2D first_step(const Grid2D& u0, const Grid2D& v0, const SchemeSpec& spec, double lambda, double tau,
                         BoundaryCondition bc) {
    detail::require_supported(spec, bc);
    detail::require_same_shape(u0, v0);
    Grid2D u1(u0.n());
    detail::accumulate_stencil(u1, u0, evaluate_table(spec.first_u, lambda), 1.0, bc);
    detail::accumulate_stencil(u1, v0, evaluate_table(spec.first_v, lambda), tau, bc);
    detail::finish_boundary(u1, bc);
    return u1;
}

/// u{k+1} = sum_s two_step[s] uk[. + s] - u{k-1}.
inline Grid2D two_step(const Grid2D& uk, const Grid2D& ukm1, const SchemeSpec& spec, double lambda,
                       BoundaryCondition bc) {
    detail::require_supported(spec, bc);
    detail::require_same_shape(uk, ukm1);
    Grid2D next(uk.n());
    auto out = next.values();
    auto prev = ukm1.values();
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = -prev[k];
    detail::accumulate_stencil(next, uk, evaluate_table(spec.two_step, lambda), 1.0, bc);
    detail::finish_boundary(next, bc);
    return next;
}

/// Squared-error and squared-reference sums of one time level.
struct StepError {
    double error_sq = 0.0;
    double reference_sq = 0.0;
};

inline StepError step_error(const Grid2D& u, double t, const SpaceTimeField& exact) {
    StepError e;
    const double h = u.h();
    for (std::size_t i = 0; i <= u.n(); ++i)
        for (std::size_t j = 0; j <= u.n(); ++j) {
            const double ue = exact(i * h, j * h, t);
            const double d = u(i, j) - ue;
            e.error_sq += d * d;
            e.reference_sq += ue * ue;
        }
    return e;
}

inline double relative_error(std::span<const StepError> steps) {
    double num = 0.0, den = 0.0;
    for (const auto& s : steps) {
        num += s.error_sq;
        den += s.reference_sq;
    }
    if (den == 0.0) throw DegenerateNorm("reference solution is zero at every sampled point");
    return std::sqrt(num / den);
}

/// Space-time relative L2 error; computed[k - 1] holds level k at t = k tau.
inline double relative_l2_error(std::span<const Grid2D> computed, double tau, const SpaceTimeField& exact) {
    if (computed.empty()) throw DomainError("relative_l2_error: need at least one time level");
    std::vector<StepError> steps;
    for (std::size_t k = 0; k < computed.size(); ++k)
        steps.push_back(step_error(computed[k], static_cast<double>(k + 1) * tau, exact));
    return relative_error(steps);
}

struct SimConfig {
    SchemeSpec scheme;
    std::size_t n = 10;
    std::size_t n_t = 1;
    double lambda = 0.707;
    double c = 1.0;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    SpaceField initial_u;
    SpaceField initial_v;
    /// Reference solution for the error sums.
    SpaceTimeField reference;
    /// Compute lambda_max and flag runs beyond it.
    bool check_stability = false;

    double h() const { return 1.0 / static_cast<double>(n); }
    double tau() const { return lambda * h() / c; }

    /// Standing-wave benchmark with c = 1.
    static SimConfig standing_wave(SchemeSpec scheme, std::size_t n, std::size_t n_t, double lambda,
                                   BoundaryCondition bc) {
        SimConfig cfg;
        cfg.scheme = std::move(scheme);
        cfg.n = n;
        cfg.n_t = n_t;
        cfg.lambda = lambda;
        cfg.bc = bc;
        cfg.initial_u = [](double, double) { return 0.0; };
        cfg.initial_v = [](double x1, double x2) { return standing_wave_velocity(x1, x2); };
        cfg.reference = [](double x1, double x2, double t) { return exact_standing_wave(x1, x2, t); };
        return cfg;
    }
};

struct SimReport {
    double error = 0.0;
    std::vector<StepError> per_step;
    double wall_time_s = 0.0;

    std::string scheme;
    std::size_t n = 0;
    std::size_t n_t = 0;
    double lambda = 0.0;
    double tau = 0.0;
    double c = 1.0;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;

    std::optional<double> lambda_max;
    bool beyond_stability_limit = false;

    /// Relative error of level k alone (1-based); 0 where the reference vanishes.
    double step_relative_error(std::size_t k) const {
        const auto& s = per_step.at(k - 1);
        return s.reference_sq > 0.0 ? std::sqrt(s.error_sq / s.reference_sq) : 0.0;
    }
};

using StepObserver = std::function<void(std::size_t k, const Grid2D& u)>;

/// First step once, then the two-step update n_t - 1 times, accumulating the
/// error sums over k = 1..n_t and all (n+1)^2 nodes. The observer, if set,
/// sees every level k = 0..n_t.
inline SimReport run(const SimConfig& cfg, const StepObserver& observer = {}) {
    const auto start = std::chrono::steady_clock::now();
    if (cfg.n_t < 1) throw DomainError("run: n_t must be at least 1");
    if (!(cfg.lambda > 0.0) || !(cfg.c > 0.0)) throw DomainError("run: lambda and c must be positive");
    if (!cfg.initial_u || !cfg.initial_v || !cfg.reference) throw DomainError("run: initial data and reference required");
    detail::require_supported(cfg.scheme, cfg.bc);

    SimReport report;
    report.scheme = cfg.scheme.name;
    report.n = cfg.n;
    report.n_t = cfg.n_t;
    report.lambda = cfg.lambda;
    report.tau = cfg.tau();
    report.c = cfg.c;
    report.bc = cfg.bc;
    if (cfg.check_stability) {
        report.lambda_max = lambda_max(cfg.scheme);
        report.beyond_stability_limit = cfg.lambda > *report.lambda_max;
    }

    Grid2D u0 = Grid2D::sample(cfg.n, cfg.initial_u);
    Grid2D v0 = Grid2D::sample(cfg.n, cfg.initial_v);
    detail::finish_boundary(u0, cfg.bc);
    detail::finish_boundary(v0, cfg.bc);
    if (observer) observer(0, u0);

    const double tau = cfg.tau();
    Grid2D prev = std::move(u0);
    Grid2D curr = first_step(prev, v0, cfg.scheme, cfg.lambda, tau, cfg.bc);
    report.per_step.push_back(step_error(curr, tau, cfg.reference));
    if (observer) observer(1, curr);

    for (std::size_t k = 2; k <= cfg.n_t; ++k) {
        Grid2D next = two_step(curr, prev, cfg.scheme, cfg.lambda, cfg.bc);
        prev = std::move(curr);
        curr = std::move(next);
        report.per_step.push_back(step_error(curr, static_cast<double>(k) * tau, cfg.reference));
        if (observer) observer(k, curr);
    }

    report.error = relative_error(report.per_step);
    report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Row-major CSV of all (n+1)^2 node values, 17 significant digits.
inline void write_csv(std::ostream& out, const Grid2D& g) {
    const auto old_flags = out.flags();
    const auto old_precision = out.precision();
    out << std::setprecision(17);
    for (std::size_t i = 0; i <= g.n(); ++i) {
        for (std::size_t j = 0; j <= g.n(); ++j) {
            if (j) out << ',';
            out << g(i, j);
        }
        out << '\n';
    }
    out.flags(old_flags);
    out.precision(old_precision);
}

}  // namespace wavestencil
