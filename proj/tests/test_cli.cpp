#include "spslice/verify/report.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const fs::path out = fs::temp_directory_path() / "spslice_cli_test_stdout.txt";
    const std::string cmd = std::string(SPSLICE_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

fs::path write_temp(const std::string& name, const std::string& text)
{
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

const char* kX0 = R"([["0","0","0","1","0","0"],["0","0","0","0","1","0"],["0","0","0","0","0","1"],
["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"]])";

const char* kRep42 = R"([["0","1","1","1","0","0"],["0","0","0","0","1","0"],["0","0","0","0","0","1"],
["0","0","0","0","0","0"],["0","0","0","-1","0","0"],["0","0","0","-1","0","0"]])";

} // namespace

TEST(Cli, MatrixUtilities)
{
    const fs::path x0 = write_temp("spslice_x0.json", kX0);
    EXPECT_EQ(run("jordan-type " + x0.string()).out, "[2,2,2]\n");
    const fs::path r42 = write_temp("spslice_r42.json", kRep42);
    EXPECT_EQ(run("in-sp " + r42.string()).out, "true\n");
    EXPECT_EQ(run("jordan-type " + r42.string()).out, "[4,2]\n");
    std::string zero = "[";
    for (int r = 0; r < 6; ++r) zero += std::string(r ? "," : "") + R"(["0","0","0","0","0","0"])";
    zero += "]";
    const fs::path z = write_temp("spslice_zero.json", zero);
    EXPECT_EQ(run("charpoly " + z.string()).out, "λ^6\n");
}

TEST(Cli, MatrixUtilityErrors)
{
    const fs::path bad = write_temp("spslice_bad.json", "[[\"1\",");
    EXPECT_EQ(run("charpoly " + bad.string()).code, 2);
    EXPECT_EQ(run("jordan-type /nonexistent/file.json").code, 2);
    const fs::path id = write_temp("spslice_id.json", R"([["1","0"],["0","1"]])");
    EXPECT_EQ(run("jordan-type " + id.string()).code, 1);
    EXPECT_EQ(run("in-sp " + id.string()).out, "false\n");
}

TEST(Cli, VerifyExitCodes)
{
    EXPECT_EQ(run("verify --sections \"\"").code, 0);
    EXPECT_EQ(run("verify --sections 5 --samples 5").code, 0);
    EXPECT_EQ(run("verify --sections \"\" --inject-failure").code, 1);
    EXPECT_EQ(run("verify --sections 7").code, 2);
    EXPECT_EQ(run("verify --samples 0").code, 2);
    EXPECT_EQ(run("verify --format xml").code, 2);
    EXPECT_EQ(run("verify --out /nonexistent/dir/report.json").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, VerifyDeterministicJson)
{
    const std::string args = "verify --sections 2,3,5 --seed 7 --samples 10";
    const auto a = spslice::verify::from_json(run(args).out);
    const auto b = spslice::verify::from_json(run(args).out);
    EXPECT_EQ(spslice::verify::to_json(a, false), spslice::verify::to_json(b, false));
    EXPECT_EQ(a.seed, 7u);
    EXPECT_EQ(a.samples, 10u);
}

TEST(Cli, VerifyWritesFileAndMarkdown)
{
    const fs::path out = fs::temp_directory_path() / "spslice_report.md";
    fs::remove(out);
    EXPECT_EQ(run("verify --sections 5 --samples 3 --format md --out " + out.string()).code, 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("# Verification report"), std::string::npos);
}
