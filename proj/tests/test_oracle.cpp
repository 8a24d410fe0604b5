#include <gtest/gtest.h>

#include <sstream>

#include "evohealth/errors.hpp"
#include "evohealth/oracle.hpp"
#include "evohealth/stage1.hpp"
#include "evohealth/stage2.hpp"

using namespace evohealth;

TEST(OracleStage1, BaselineGridFindsTwoThirds) {
    const auto r = grid_argmax_stage1(validate_stage1(Stage1Params{}), 1.0, 0.0, 1.0, 1000000);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.brute_value, 2.0 / 3.0, 2e-6);
    EXPECT_EQ(r.resolution, 1e-6);
    EXPECT_EQ(r.bound, 2e-6);
}

TEST(OracleStage1, AdversityNearTechnologyLimit) {
    const auto p = validate_stage1(Stage1Params{});
    for (double a : {0.99, 0.9999, 0.999999}) {
        const auto r = grid_argmax_stage1(p, 1.0, a, 1.0, 100000);
        EXPECT_TRUE(r.pass) << a;
        EXPECT_GT(r.brute_value, a);
        EXPECT_LT(r.brute_value, 1.0);
    }
}

TEST(OracleStage1, RejectsInfeasibleInputs) {
    const auto p = validate_stage1(Stage1Params{});
    EXPECT_THROW(grid_argmax_stage1(p, 1.0, 1.0, 1.0, 1000), DomainError);
    EXPECT_THROW(grid_argmax_stage1(p, 1.0, 0.0, 1.0, 999), ConfigError);
}

TEST(OracleStage1, ThresholdBisectionAndSigns) {
    const auto p = validate_stage1(Stage1Params{});
    const auto r = bisect_threshold(p, 1.0, 0.0);
    EXPECT_TRUE(r.pass);
    EXPECT_NEAR(r.brute_value, 1024.0 / 2700.0, 1e-12);
    const double g = r.closed_value;
    EXPECT_GT(brute_fertility_stage1(p, 1.0, 0.0, g / 2.0), 1.0);
    EXPECT_LT(brute_fertility_stage1(p, 1.0, 0.0, 2.0 * g), 1.0);
}

TEST(OracleStage2, GridAgreesAtBaseline) {
    const auto reports = grid_argmax_utility2(validate_stage2(Stage2Params{}), 1.0, 1000);
    ASSERT_EQ(reports.size(), 3u);
    for (const auto& r : reports) EXPECT_TRUE(r.pass) << r.target << " err " << r.abs_error;
    EXPECT_NEAR(reports[0].brute_value, 0.77273, 2e-3);
}

TEST(OracleStage2, AllocationStableAcrossPopulation) {
    const auto p = validate_stage2(Stage2Params{});
    const auto at1 = grid_argmax_utility2(p, 1.0, 1000);
    const auto at100 = grid_argmax_utility2(p, 100.0, 1000);
    EXPECT_EQ(at1[0].brute_value, at100[0].brute_value);
    for (const auto& r : at100) EXPECT_TRUE(r.pass) << r.target;
}

TEST(OracleStage2, AllocationTendsToBetaAsGammaApproachesOne) {
    Stage2Params raw;
    raw.gamma = 0.9999;
    const auto p = validate_stage2(raw);
    EXPECT_NEAR(optimal_health_share2(p), p.beta, 1e-3);
    for (const auto& r : grid_argmax_utility2(p, 1.0, 1000)) EXPECT_TRUE(r.pass) << r.target;
}

TEST(OracleStage3, BaselineAgreementAndCornerNote) {
    const auto r = grid_argmax_utility3(validate_stage3(Stage3Params{}), 1000000);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.note, "grid maximum at x->0 corner");
}

TEST(OracleStage3, NoRootCaseComparesRootCounts) {
    Stage3Params raw;
    raw.A = 1.0;
    const auto r = grid_argmax_utility3(validate_stage3(raw), 100000);
    EXPECT_EQ(r.target, "stage3.root_count");
    EXPECT_EQ(r.brute_value, 0.0);
    EXPECT_TRUE(r.pass);
}

TEST(OracleReports, PassFlagMatchesBound) {
    const auto r = make_report("t", 1.0, 1.5, 0.1, 0.4);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.abs_error, 0.5);
    EXPECT_TRUE(make_report("t", 1.0, 1.5, 0.1, 0.5).pass);
}

TEST(OracleSuite, AllBaselineFixturesPass) {
    const auto reports = run_oracle_suite(OracleStage::all);
    EXPECT_EQ(reports.size(), 18u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.pass) << r.target;
        EXPECT_EQ(r.pass, r.abs_error <= r.bound);
    }
}

TEST(OracleSuite, TightToleranceProducesFailures) {
    const auto reports = run_oracle_suite(OracleStage::stage1, 1e-12);
    std::size_t failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    EXPECT_GT(failed, 0u);
}

TEST(OracleSuite, StageNames) {
    EXPECT_EQ(parse_oracle_stage("all"), OracleStage::all);
    EXPECT_EQ(parse_oracle_stage("stage2"), OracleStage::stage2);
    EXPECT_THROW(parse_oracle_stage("stage4"), ConfigError);
}

TEST(OracleSuite, CsvHasOneRowPerReport) {
    std::stringstream out;
    write_reports_csv(out, run_oracle_suite(OracleStage::stage2));
    std::string line;
    std::getline(out, line);
    EXPECT_EQ(line, "target,closed_value,brute_value,abs_error,resolution,bound,pass,note");
    int rows = 0;
    while (std::getline(out, line)) ++rows;
    EXPECT_EQ(rows, 9);
}
