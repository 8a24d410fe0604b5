#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "evohealth/config_file.hpp"
#include "evohealth/csv_io.hpp"
#include "evohealth/errors.hpp"

using namespace evohealth;

TEST(Csv, ShortestRoundTripFormatting) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(format_double(1e-300), "1e-300");
    for (double v : {1.0 / 3.0, 0.38490017945975050, 6.705123241667558, -2.5e-17}) {
        EXPECT_EQ(parse_double(format_double(v), "v"), v);
    }
}

TEST(Csv, StrictParsing) {
    EXPECT_EQ(parse_double(" 1.5 ", "x"), 1.5);
    EXPECT_EQ(parse_double("+2", "x"), 2.0);
    EXPECT_THROW(parse_double("1.5x", "x"), ConfigError);
    EXPECT_THROW(parse_double("", "x"), ConfigError);
    EXPECT_THROW(parse_double("one", "x"), ConfigError);
}

TEST(Csv, Fnv1aReferenceVectors) {
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
    EXPECT_EQ(hex64(0xabcULL), "0000000000000abc");
}

TEST(Csv, ReadsMetadataHeaderAndRows) {
    std::stringstream in("# seed=1\n# note\nt,a\n0,0.5\n1,0.25\n");
    const CsvTable t = read_csv(in);
    ASSERT_EQ(t.metadata.size(), 2u);
    EXPECT_EQ(t.metadata[0], "seed=1");
    EXPECT_EQ(t.header, (std::vector<std::string>{"t", "a"}));
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[1][1], "0.25");
    EXPECT_EQ(t.column("a"), 1);
    EXPECT_EQ(t.column("b"), -1);
}

TEST(Csv, SplitKeepsEmptyCells) {
    EXPECT_EQ(split_csv_line("a,,b"), (std::vector<std::string>{"a", "", "b"}));
    EXPECT_EQ(split_csv_line("x\r"), (std::vector<std::string>{"x"}));
}

TEST(Config, ParsesTablesQuotesAndComments) {
    std::stringstream in(
        "# leading comment\n"
        "[stage1]\n"
        "alpha = 0.3   # inline\n"
        "[shocks]\n"
        "kind = \"ar1\"\n"
        "seed = 99\n");
    const ConfigFile f = parse_config(in);
    ASSERT_NE(f.find("stage1"), nullptr);
    EXPECT_EQ(f.find("stage1")->at("alpha"), "0.3");
    EXPECT_EQ(f.find("shocks")->at("kind"), "ar1");
    EXPECT_EQ(f.find("stage9"), nullptr);

    const Stage1Params p = apply_table(*f.find("stage1"), Stage1Params{});
    EXPECT_EQ(p.alpha, 0.3);
    EXPECT_EQ(p.gamma, 0.4);
    const ShockProcessConfig s = apply_table(*f.find("shocks"), ShockProcessConfig{});
    EXPECT_EQ(s.kind, ShockKind::ar1);
    EXPECT_EQ(s.seed, 99u);
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
    EXPECT_THROW(apply_table(ConfigTable{{"alpah", "0.3"}}, Stage1Params{}), ConfigError);
    EXPECT_THROW(apply_table(ConfigTable{{"beta", "0.3"}}, Stage1Params{}), ConfigError);
    EXPECT_THROW(apply_table(ConfigTable{{"A", "lots"}}, Stage3Params{}), ConfigError);
    EXPECT_THROW(apply_table(ConfigTable{{"seed", "-4"}}, ShockProcessConfig{}), ConfigError);
    EXPECT_THROW(apply_table(ConfigTable{{"kind", "poisson"}}, ShockProcessConfig{}), ConfigError);
}

TEST(Config, RejectsKeysOutsideTables) {
    std::stringstream in("alpha = 0.3\n[stage1]\n");
    EXPECT_THROW(parse_config(in), ConfigError);
    std::stringstream broken("[stage1\nalpha=1\n");
    EXPECT_THROW(parse_config(broken), ConfigError);
    EXPECT_THROW(load_config_file("/nonexistent/evohealth.toml"), ConfigError);
}
