#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "evohealth/errors.hpp"
#include "evohealth/params.hpp"

using namespace evohealth;

namespace {

template <typename F>
std::string range_field(F&& f) {
    try {
        f();
    } catch (const RangeError& e) {
        return e.field();
    }
    return "<none>";
}

}  // namespace

TEST(Stage1Validation, BaselineIsValidAndCachesSurvivalIncome) {
    const Stage1Params p = validate_stage1(Stage1Params{});
    EXPECT_NEAR(p.y_hat, 0.5 / 0.6, 1e-15);
    EXPECT_NEAR(p.y_hat, 0.8333, 1e-4);
}

TEST(Stage1Validation, RejectsBoundaryAlpha) {
    Stage1Params p;
    p.alpha = 1.0;
    EXPECT_EQ(range_field([&] { validate_stage1(p); }), "alpha");
}

TEST(Stage1Validation, RejectsZeroSurvivalConsumption) {
    Stage1Params p;
    p.c_hat = 0.0;
    EXPECT_EQ(range_field([&] { validate_stage1(p); }), "c_hat");
}

TEST(Stage1Validation, RejectsNonFiniteValues) {
    Stage1Params p;
    p.phi = std::numeric_limits<double>::quiet_NaN();
    EXPECT_EQ(range_field([&] { validate_stage1(p); }), "phi");
    p = Stage1Params{};
    p.kappa = std::numeric_limits<double>::infinity();
    EXPECT_EQ(range_field([&] { validate_stage1(p); }), "kappa");
}

TEST(Stage1Validation, NamesFirstOffendingField) {
    Stage1Params p;
    p.gamma = 2.0;
    p.p = -1.0;
    EXPECT_EQ(range_field([&] { validate_stage1(p); }), "gamma");
}

TEST(Stage1Validation, IsIdempotent) {
    Stage1Params raw;
    raw.gamma = 0.6;
    raw.p = 0.4;
    const Stage1Params once = validate_stage1(raw);
    const Stage1Params twice = validate_stage1(once);
    EXPECT_EQ(describe(once), describe(twice));
    EXPECT_EQ(once.y_hat, twice.y_hat);
}

TEST(Stage2Validation, BaselineIsValid) {
    EXPECT_NO_THROW(validate_stage2(Stage2Params{}));
}

TEST(Stage2Validation, RejectsZeroBeta) {
    Stage2Params p;
    p.beta = 0.0;
    EXPECT_EQ(range_field([&] { validate_stage2(p); }), "beta");
}

TEST(Stage2Validation, RejectsUnitMortalityCap) {
    Stage2Params p;
    p.delta_max = 1.0;
    EXPECT_EQ(range_field([&] { validate_stage2(p); }), "delta_max");
}

TEST(Stage2Validation, RejectsUnorderedMortalityBounds) {
    Stage2Params p;
    p.delta_min = 0.6;
    p.delta_max = 0.5;
    EXPECT_THROW(validate_stage2(p), RangeError);
}

TEST(Stage3Validation, BaselineIsValid) {
    EXPECT_NO_THROW(validate_stage3(Stage3Params{}));
}

TEST(Stage3Validation, RejectsZeroProductivity) {
    Stage3Params p;
    p.A = 0.0;
    EXPECT_EQ(range_field([&] { validate_stage3(p); }), "A");
}

TEST(Stage3Validation, RejectsUnitGamma) {
    Stage3Params p;
    p.gamma = 1.0;
    EXPECT_EQ(range_field([&] { validate_stage3(p); }), "gamma");
}

TEST(Describe, RoundTripsShortestDecimal) {
    Stage3Params p;
    p.A = 0.1;
    EXPECT_EQ(describe(p), "A=0.1;alpha=0.5;gamma=0.5;p=0.25");
}
