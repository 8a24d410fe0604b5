#include <gtest/gtest.h>

#include <cmath>

#include "evohealth/errors.hpp"
#include "evohealth/oracle.hpp"
#include "evohealth/stage3.hpp"

using namespace evohealth;

namespace {

Stage3Params make(double A, double alpha = 0.5, double gamma = 0.5, double p = 0.25) {
    return validate_stage3(Stage3Params{A, alpha, gamma, p});
}

}  // namespace

TEST(Stage3Production, ReferenceValues) {
    EXPECT_NEAR(production3(make(1.0), 0.5), 0.5, 1e-15);
    EXPECT_NEAR(production3(make(2.0), 0.25), 0.866025403784439, 1e-12);
    EXPECT_THROW(production3(make(1.0), 0.0), DomainError);
    EXPECT_THROW(production3(make(1.0), 1.0), DomainError);
}

TEST(Stage3Production, RisesBelowTheSignCondition) {
    const auto p = make(1.0, 0.3);
    // dy/dx > 0 iff x/(1-x) < (1-alpha)/alpha, i.e. x < 0.7 here.
    const double h = 1e-6;
    for (double x : {0.2, 0.5, 0.69}) EXPECT_GT(production3(p, x + h), production3(p, x - h)) << x;
    for (double x : {0.71, 0.9}) EXPECT_LT(production3(p, x + h), production3(p, x - h)) << x;
}

TEST(Stage3Residual, ReferenceValue) {
    EXPECT_NEAR(foc_residual3(make(1.0), 0.5), std::log(1.0 / 6.0), 1e-14);
    EXPECT_NEAR(foc_residual3(make(1.0), 0.5), -1.791759469228055, 1e-12);
}

TEST(Stage3Residual, ScalingProductivityByEShiftsByOne) {
    const auto a = make(1.3), b = make(1.3 * std::exp(1.0));
    for (double x : {0.01, 0.3, 0.77, 0.99}) {
        EXPECT_NEAR(foc_residual3(b, x) - foc_residual3(a, x), 1.0, 1e-12);
    }
}

TEST(Stage3Residual, DivergesAtRightEdge) {
    EXPECT_LT(foc_residual3(make(1e6), 1.0 - 1e-9), -1e6);
    EXPECT_THROW(foc_residual3(make(1.0), 1.0), DomainError);
}

TEST(Stage3Residual, IsTheScaledUtilitySlope) {
    const auto p = make(7.389);
    const double h = 1e-6;
    for (double x : {0.2, 0.45, 0.8}) {
        const double slope = (utility3(p, x + h) - utility3(p, x - h)) / (2.0 * h);
        EXPECT_NEAR(slope, (1.0 - p.gamma) * foc_residual3(p, x), 1e-6);
    }
}

TEST(Stage3Solve, NoRootWhenProductivityIsLow) {
    try {
        solve_health_investment3(make(1.0));
        FAIL() << "expected NoRootError";
    } catch (const NoRootError& e) {
        EXPECT_NEAR(e.max_residual(), -1.7771, 1e-3);
        EXPECT_NEAR(e.argmax(), 0.4556, 1e-3);
        EXPECT_NE(std::string(e.what()).find("NoRootError"), std::string::npos);
    }
}

TEST(Stage3Solve, BaselineHasTwoRootsAndPicksTheLocalMaximum) {
    const auto s = solve_health_investment3(make(7.389));
    ASSERT_EQ(s.root_candidates.size(), 2u);
    EXPECT_NEAR(s.root_candidates[0].x, 0.28525, 1e-4);
    EXPECT_NEAR(s.root_candidates[1].x, 0.620312, 1e-5);
    EXPECT_EQ(s.x_star, s.root_candidates[1].x);
    EXPECT_GT(s.root_candidates[1].utility, s.root_candidates[0].utility);
    for (const auto& r : s.root_candidates) EXPECT_LE(std::abs(r.residual), 1e-9);
    EXPECT_NEAR(s.n_star, fertility3(make(7.389), s.x_star), 1e-15);
    EXPECT_FALSE(s.fertility_below_one);
    // The x -> 0 limit gives gamma * ln(1/p), above the interior optimum here.
    EXPECT_NEAR(s.corner_utility, 0.5 * std::log(4.0), 1e-15);
    EXPECT_TRUE(s.corner_dominates);
}

TEST(Stage3Solve, BudgetBindsAtSolution) {
    const auto p = make(20.0, 0.4, 0.6, 0.3);
    const auto s = solve_health_investment3(p);
    EXPECT_NEAR(s.c_star + p.p * s.y * s.n_star, s.y, 1e-12 * s.y);
}

TEST(Stage3Solve, AgreesWithGridOracle) {
    EXPECT_TRUE(grid_argmax_utility3(make(7.389), 1000000).pass);
    EXPECT_TRUE(grid_argmax_utility3(make(50.0, 0.3, 0.6), 1000000).pass);
}

TEST(Stage3Fertility, ValuesAndMonotonicity) {
    const auto p = make(7.389);
    EXPECT_NEAR(fertility3(p, 1.0), 2.0, 1e-15);
    double prev = fertility3(p, 0.0);
    for (int i = 1; i <= 100; ++i) {
        const double n = fertility3(p, i / 100.0);
        EXPECT_LT(n, prev);
        prev = n;
    }
}

TEST(Stage3Fertility, FertilityFormReproducesResidualAtSolution) {
    for (double A : {7.389, 20.0, 100.0}) {
        const auto p = make(A);
        const auto s = solve_health_investment3(p);
        EXPECT_NEAR(foc_residual3_fertility_form(p, s.n_star), foc_residual3(p, s.x_star), 1e-8) << A;
    }
    const auto p = make(9.0, 0.35, 0.45, 0.3);
    for (double x : {0.1, 0.5, 0.9}) {
        EXPECT_NEAR(foc_residual3_fertility_form(p, fertility3(p, x)), foc_residual3(p, x), 1e-10);
    }
}

TEST(Stage3Statics, GammaDerivativeNegativeAtUtilityMaximum) {
    const double d = comparative_statics3(make(20.0), Stage3Param::gamma, 1e-4);
    EXPECT_LT(d, 0.0);
    // Implicit-function value -G_gamma / G_x at the root.
    const auto p = make(20.0);
    const auto s = solve_health_investment3(p);
    const double h = 1e-6;
    auto G = [&](double alpha, double gamma, double x) {
        return foc_residual3(Stage3Params{p.A, alpha, gamma, p.p}, x);
    };
    const double G_g = (G(0.5, 0.5 + h, s.x_star) - G(0.5, 0.5 - h, s.x_star)) / (2 * h);
    const double G_x = (G(0.5, 0.5, s.x_star + h) - G(0.5, 0.5, s.x_star - h)) / (2 * h);
    EXPECT_NEAR(d, -G_g / G_x, 1e-5);
}

// Near the fold with high alpha and low gamma the upper root sits at small x, where
// ln((1-x)/x) > 1/(1-x) and the alpha derivative changes sign.
TEST(Stage3Statics, AlphaDerivativePositiveNearFoldAtLowGamma) {
    const Stage3Params q = make(2.02, 0.9, 0.05);
    const Stage3Solution s = solve_health_investment3(q);
    ASSERT_EQ(s.root_candidates.size(), 2u);
    EXPECT_LT(s.x_star, 0.215);
    EXPECT_GT(comparative_statics3(q, Stage3Param::alpha, 1e-5), 0.0);
    EXPECT_LT(comparative_statics3(q, Stage3Param::gamma, 1e-5), 0.0);
}

TEST(Stage3Statics, LowestRootBranchRisesWithGamma) {
    EXPECT_GT(comparative_statics3(make(20.0), Stage3Param::gamma, 1e-4, RootBranch::lowest), 0.0);
}

TEST(Stage3Statics, PerturbationAcrossFoldIsReported) {
    // Just above the productivity where the two roots are born; the lower stencil point has none.
    double A_fold = 0.0;
    try {
        solve_health_investment3(make(1.0));
    } catch (const NoRootError& e) {
        A_fold = std::exp(-e.max_residual());
    }
    ASSERT_GT(A_fold, 1.0);
    EXPECT_THROW(comparative_statics3(make(A_fold * 1.0001), Stage3Param::A, 1e-3 * A_fold), PerturbationError);
    EXPECT_THROW(comparative_statics3(make(1.0), Stage3Param::gamma, 1e-4), NoRootError);
}

TEST(Stage3Statics, MixedPartialMatchesNestedDifferences) {
    const auto p = make(50.0, 0.4, 0.5);
    const double h = 1e-3;
    const double mixed = mixed_partial3(p, h, h);
    Stage3Params up = p, down = p;
    up.alpha += h;
    down.alpha -= h;
    const double nested = (comparative_statics3(up, Stage3Param::gamma, h) -
                           comparative_statics3(down, Stage3Param::gamma, h)) /
                          (2 * h);
    EXPECT_NEAR(mixed, nested, 1e-6);
}

TEST(Stage3SignMap, RecordsStatusesAndIntervals) {
    const SignMap map = derivative_sign_map(make(20.0), Stage3Param::gamma, 0.3, 0.7, 9,
                                            Stage3Param::gamma, 1e-4, RootBranch::lowest);
    ASSERT_EQ(map.entries.size(), 9u);
    for (const auto& e : map.entries) EXPECT_EQ(e.status, "ok");
    ASSERT_EQ(map.positive_intervals.size(), 1u);
    EXPECT_EQ(map.positive_intervals[0].first, 0.3);
    EXPECT_EQ(map.positive_intervals[0].second, 0.7);

    const SignMap top = derivative_sign_map(make(20.0), Stage3Param::gamma, 0.3, 0.7, 9,
                                            Stage3Param::gamma, 1e-4);
    EXPECT_TRUE(top.positive_intervals.empty());

    const SignMap poor = derivative_sign_map(make(1.0), Stage3Param::alpha, 0.4, 0.6, 3,
                                             Stage3Param::gamma, 1e-4);
    for (const auto& e : poor.entries) EXPECT_EQ(e.status, "no-root");

    // The residual does not involve p, so the only failure at p near 1 is the stencil leaving (0,1).
    const SignMap edge = derivative_sign_map(make(20.0), Stage3Param::p, 0.5, 0.99995, 2,
                                             Stage3Param::p, 1e-4);
    EXPECT_EQ(edge.entries.front().status, "ok");
    EXPECT_EQ(edge.entries.back().status, "out-of-range");
}

TEST(Stage3Params, NamesRoundTrip) {
    for (auto w : {Stage3Param::A, Stage3Param::alpha, Stage3Param::gamma, Stage3Param::p}) {
        EXPECT_EQ(parse_stage3_param(to_string(w)), w);
    }
    EXPECT_THROW(parse_stage3_param("beta"), ConfigError);
}
