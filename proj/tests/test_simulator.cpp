#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "wavestencil/simulator.hpp"

namespace wavestencil {
namespace {

constexpr auto kDirichlet = BoundaryCondition::Dirichlet;
constexpr auto kPeriodic = BoundaryCondition::Periodic;

double rel_dev(double value, double reference) { return std::abs(value / reference - 1.0); }

TEST(ExactStandingWave, Examples) {
    // sin(2 sqrt(2) pi t) = 1 at t = 1 / (4 sqrt(2)).
    EXPECT_NEAR(exact_standing_wave(0.25, 0.25, 1.0 / (4.0 * std::numbers::sqrt2)), 1.0, 1e-15);
    EXPECT_EQ(exact_standing_wave(0.0, 0.3, 0.7), 0.0);
    EXPECT_EQ(exact_standing_wave(0.2, 0.3, 0.0), 0.0);
}

TEST(Grid2D, RejectsTinyGrids) { EXPECT_THROW(Grid2D(1), DomainError); }

TEST(FirstStep, ZeroDataStaysZero) {
    for (auto name : {"P5", "P13"}) {
        const auto bc = std::string_view(name) == "P5" ? kDirichlet : kPeriodic;
        const Grid2D zero(8);
        EXPECT_EQ(first_step(zero, zero, named_scheme(name), 0.7, 0.1, bc), zero);
    }
}

TEST(FirstStep, ConstantIsPreservedPeriodic) {
    const Grid2D one = Grid2D::sample(8, [](double, double) { return 1.0; });
    const Grid2D zero(8);
    for (auto name : {"P5", "P9", "C9", "P13"}) {
        const Grid2D u1 = first_step(one, zero, named_scheme(name), 0.7, 0.1, kPeriodic);
        for (double v : u1.values()) EXPECT_NEAR(v, 1.0, 1e-14) << name;
    }
}

TEST(FirstStep, IsotropicVelocityOnly) {
    const Grid2D zero(6);
    const Grid2D v0 = Grid2D::sample(6, [](double x, double y) { return 1.0 + x * y; });
    const double tau = 0.05;
    const Grid2D u1 = first_step(zero, v0, named_scheme("C9"), 0.8, tau, kPeriodic);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_DOUBLE_EQ(u1(i, j), tau * v0(i, j));
}

TEST(TwoStep, ConstantIsPreservedPeriodic) {
    const Grid2D c = Grid2D::sample(9, [](double, double) { return 0.37; });
    for (auto name : {"P5", "P9", "C9", "P13"}) {
        const Grid2D next = two_step(c, c, named_scheme(name), 0.7, kPeriodic);
        for (double v : next.values()) EXPECT_NEAR(v, 0.37, 1e-14) << name;
    }
}

TEST(TwoStep, ZeroCurrentReversesPrevious) {
    const Grid2D zero(7);
    const Grid2D g = Grid2D::sample(7, [](double x, double y) { return std::sin(3 * x) + y; });
    const Grid2D next = two_step(zero, g, named_scheme("P13"), 0.7, kPeriodic);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(next(i, j), -g(i, j));
}

TEST(Simulator, RadiusTwoNeedsPeriodic) {
    const Grid2D zero(8);
    const SchemeSpec p13 = named_scheme("P13");
    EXPECT_THROW(first_step(zero, zero, p13, 0.7, 0.1, kDirichlet), RadiusUnsupported);
    EXPECT_THROW(two_step(zero, zero, p13, 0.7, kDirichlet), RadiusUnsupported);
    EXPECT_THROW(run(SimConfig::standing_wave(p13, 10, 10, 0.707, kDirichlet)), RadiusUnsupported);
}

TEST(Simulator, DirichletBoundaryIsExactlyZero) {
    std::size_t seen = 0;
    run(SimConfig::standing_wave(named_scheme("P9"), 12, 6, 0.7, kDirichlet), [&](std::size_t, const Grid2D& u) {
        ++seen;
        for (std::size_t k = 0; k <= u.n(); ++k) {
            EXPECT_EQ(u(0, k), 0.0);
            EXPECT_EQ(u(u.n(), k), 0.0);
            EXPECT_EQ(u(k, 0), 0.0);
            EXPECT_EQ(u(k, u.n()), 0.0);
        }
    });
    EXPECT_EQ(seen, 7u);
}

TEST(Run, FivePointFirstRows) {
    const SchemeSpec p5 = named_scheme("P5");
    EXPECT_LT(rel_dev(run(SimConfig::standing_wave(p5, 10, 1, 0.707, kDirichlet)).error, 9.0843e-4), 0.01);
    EXPECT_LT(rel_dev(run(SimConfig::standing_wave(p5, 10, 10, 0.707, kDirichlet)).error, 9.1540e-4), 0.01);
}

TEST(Run, ThirteenPointPeriodic) {
    const auto r = run(SimConfig::standing_wave(named_scheme("P13"), 20, 20, 0.707, kPeriodic));
    EXPECT_LT(rel_dev(r.error, 6.6004e-7), 0.05);
}

TEST(Run, ConventionalFivePoint) {
    const auto r = run(SimConfig::standing_wave(named_scheme("C5"), 40, 40, 0.707, kDirichlet));
    EXPECT_LT(rel_dev(r.error, 4.1234e-3), 0.01);
}

TEST(Run, ConventionalThirteenMatchesFiveAfterOneStep) {
    const double c13 = run(SimConfig::standing_wave(named_scheme("C13"), 10, 1, 0.707, kPeriodic)).error;
    const double c5 = run(SimConfig::standing_wave(named_scheme("C5"), 10, 1, 0.707, kDirichlet)).error;
    EXPECT_LT(rel_dev(c13, 6.8938e-2), 0.01);
    EXPECT_LT(rel_dev(c5, 6.8938e-2), 0.01);
}

TEST(Run, ReportEcho) {
    const auto r = run(SimConfig::standing_wave(named_scheme("P5"), 10, 3, 0.5, kDirichlet));
    EXPECT_EQ(r.scheme, "P5");
    EXPECT_EQ(r.per_step.size(), 3u);
    EXPECT_DOUBLE_EQ(r.tau, 0.05);
    EXPECT_GE(r.error, 0.0);
    EXPECT_FALSE(r.lambda_max.has_value());
}

TEST(Run, FlagsUnstableLambda) {
    auto cfg = SimConfig::standing_wave(named_scheme("P5"), 10, 3, 0.9, kDirichlet);
    cfg.check_stability = true;
    const auto r = run(cfg);
    ASSERT_TRUE(r.lambda_max.has_value());
    EXPECT_TRUE(r.beyond_stability_limit);
}

TEST(Run, ZeroDataIsDegenerate) {
    auto cfg = SimConfig::standing_wave(named_scheme("P5"), 10, 5, 0.7, kDirichlet);
    cfg.initial_v = [](double, double) { return 0.0; };
    cfg.reference = [](double, double, double) { return 0.0; };
    std::vector<Grid2D> levels;
    EXPECT_THROW(run(cfg, [&](std::size_t, const Grid2D& u) { levels.push_back(u); }), DegenerateNorm);
    ASSERT_EQ(levels.size(), 6u);
    for (const auto& g : levels)
        for (double v : g.values()) EXPECT_EQ(v, 0.0);
}

TEST(RelativeL2Error, Examples) {
    const double tau = 0.03;
    auto exact_levels = [&](double scale) {
        std::vector<Grid2D> out;
        for (int k = 1; k <= 4; ++k)
            out.push_back(Grid2D::sample(10, [&](double x, double y) { return scale * exact_standing_wave(x, y, k * tau); }));
        return out;
    };
    const SpaceTimeField exact = [](double x, double y, double t) { return exact_standing_wave(x, y, t); };
    EXPECT_EQ(relative_l2_error(exact_levels(1.0), tau, exact), 0.0);
    EXPECT_NEAR(relative_l2_error(exact_levels(2.0), tau, exact), 1.0, 1e-15);
    const SpaceTimeField zero = [](double, double, double) { return 0.0; };
    EXPECT_THROW(relative_l2_error(exact_levels(1.0), tau, zero), DegenerateNorm);
    EXPECT_THROW(relative_l2_error({}, tau, exact), DomainError);
}

TEST(Properties, Linearity) {
    for (auto [name, bc] : {std::pair{"P9", kDirichlet}, {"P13", kPeriodic}}) {
        auto base = SimConfig::standing_wave(named_scheme(name), 12, 8, 0.7, bc);
        base.initial_u = [](double x, double y) { return std::sin(2 * std::numbers::pi * x) * y * (1 - y); };
        auto scaled = base;
        const double alpha = 3.0;
        scaled.initial_u = [f = base.initial_u, alpha](double x, double y) { return alpha * f(x, y); };
        scaled.initial_v = [f = base.initial_v, alpha](double x, double y) { return alpha * f(x, y); };
        std::vector<Grid2D> a, b;
        run(base, [&](std::size_t, const Grid2D& u) { a.push_back(u); });
        run(scaled, [&](std::size_t, const Grid2D& u) { b.push_back(u); });
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t k = 0; k < a.size(); ++k)
            for (std::size_t i = 0; i < a[k].values().size(); ++i)
                EXPECT_NEAR(b[k].values()[i], alpha * a[k].values()[i], 1e-13 * (1.0 + std::abs(b[k].values()[i])));
    }
}

TEST(Properties, SwapSymmetryPreserved) {
    for (auto [name, bc] : {std::pair{"P5", kDirichlet}, {"P9", kDirichlet}, {"C9", kDirichlet}, {"P13", kPeriodic}}) {
        auto cfg = SimConfig::standing_wave(named_scheme(name), 16, 16, 0.7, bc);
        cfg.initial_u = [](double x, double y) { return std::sin(std::numbers::pi * x) * std::sin(std::numbers::pi * y) * (x + y); };
        run(cfg, [&](std::size_t, const Grid2D& u) {
            for (std::size_t i = 0; i <= u.n(); ++i)
                for (std::size_t j = 0; j <= u.n(); ++j) EXPECT_NEAR(u(i, j), u(j, i), 1e-12) << name;
        });
    }
}

TEST(Properties, FivePointConvergesQuadratically) {
    const SchemeSpec p5 = named_scheme("P5");
    double previous = 0.0;
    for (std::size_t n : {10, 20, 40}) {
        const double e = run(SimConfig::standing_wave(p5, n, n, 0.707, kDirichlet)).error;
        if (previous > 0.0) EXPECT_GE(previous / e, 8.0) << "n=" << n;
        previous = e;
    }
}

TEST(Properties, Deterministic) {
    const auto cfg = SimConfig::standing_wave(named_scheme("P13"), 20, 20, 0.707, kPeriodic);
    EXPECT_EQ(run(cfg).error, run(cfg).error);
}

TEST(WriteCsv, SeventeenDigitsRoundTrip) {
    const Grid2D g = Grid2D::sample(3, [](double x, double y) { return std::exp(x) / 3.0 + y; });
    std::ostringstream out;
    write_csv(out, g);
    std::istringstream in(out.str());
    std::string line;
    std::size_t i = 0;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        std::size_t j = 0;
        while (std::getline(cells, cell, ',')) {
            EXPECT_EQ(std::stod(cell), g(i, j));
            ++j;
        }
        EXPECT_EQ(j, 4u);
        ++i;
    }
    EXPECT_EQ(i, 4u);
}

}  // namespace
}  // namespace wavestencil
