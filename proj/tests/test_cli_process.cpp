// Runs the installed-style binary end to end and checks exit codes and output bytes.
#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

const std::filesystem::path kDir = std::filesystem::temp_directory_path() / "evohealth_cli_tests";

int run(const std::string& args) {
    std::filesystem::create_directories(kDir);
    const std::string cmd = "env -u EVOHEALTH_CONFIG " + std::string(EVOHEALTH_CLI_PATH) + " " + args +
                            " >" + (kDir / "stdout.txt").string() + " 2>" + (kDir / "stderr.txt").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string out_path(const std::string& name) { return (kDir / name).string(); }

}  // namespace

TEST(CliProcess, SolveExitCodes) {
    EXPECT_EQ(run("solve stage2 --config " EVOHEALTH_CONFIG_DIR "/baseline.toml --L 1"), 0);
    EXPECT_NE(slurp(kDir / "stdout.txt").find("0.77272727"), std::string::npos);
    EXPECT_EQ(run("solve stage1 --a 0.5 --lambda 1"), 0);
    EXPECT_NE(slurp(kDir / "stdout.txt").find("0.8333333"), std::string::npos);
    EXPECT_EQ(run("solve stage3 --A 1"), 3);
    EXPECT_NE(slurp(kDir / "stderr.txt").find("NoRootError"), std::string::npos);
    EXPECT_EQ(run("solve stage1 --alpha 1"), 2);
    EXPECT_EQ(run("solve stage1 --not-a-key 3"), 2);
    EXPECT_EQ(run("solve"), 2);
    EXPECT_EQ(run("frobnicate"), 2);
}

TEST(CliProcess, VerifyExitCodes) {
    EXPECT_EQ(run("verify --stage all"), 0);
    EXPECT_EQ(run("verify --stage stage1 --tolerance 1e-15"), 1);
    EXPECT_EQ(run("verify --stage nonsense"), 2);
}

TEST(CliProcess, SimulateStage1Rows) {
    ASSERT_EQ(run("simulate stage1 --seed 42 --T 500 --out " + out_path("cli_s1.csv")), 0);
    std::ifstream in(out_path("cli_s1.csv"));
    std::string line;
    int data = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            header = true;
            continue;
        }
        ++data;
    }
    EXPECT_EQ(data, 501);
}

TEST(CliProcess, ByteIdenticalReruns) {
    const std::string sim = "simulate --config " EVOHEALTH_CONFIG_DIR "/baseline.toml --seed 7 --out ";
    ASSERT_EQ(run(sim + out_path("r1.csv")), 0);
    ASSERT_EQ(run(sim + out_path("r2.csv")), 0);
    EXPECT_EQ(slurp(out_path("r1.csv")), slurp(out_path("r2.csv")));
    ASSERT_EQ(run("plot --in " + out_path("r1.csv") + " --columns lambda,L --out " + out_path("r1.svg")), 0);
    ASSERT_EQ(run("plot --in " + out_path("r2.csv") + " --columns lambda,L --out " + out_path("r2.svg")), 0);
    EXPECT_EQ(slurp(out_path("r1.svg")), slurp(out_path("r2.svg")));
    EXPECT_EQ(run("plot --in " + out_path("r1.csv") + " --columns nope --out " + out_path("x.svg")), 2);
}
