#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

using dtroots::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, MaxDegreeBoth)
{
    auto r = invoke({"maxdeg", "--type", "A", "--genus", "16", "--method", "both"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("brute: Exact(3)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\nagree\n"), std::string::npos) << r.out;
}

TEST(Cli, Exists)
{
    auto r = invoke({"exists", "--type", "B", "--genus", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "false (g' >= 2)\n");

    auto surface = invoke({"exists", "--type", "A", "--surface-genus", "6", "--format", "json"});
    auto j = nlohmann::json::parse(surface.out);
    EXPECT_EQ(j["genus"], 4);
    EXPECT_EQ(j["exists"], false);
}

TEST(Cli, HomologySquareRoot)
{
    auto r = invoke({"homology", "--op", "sqrt", "--genus", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "no square root found (exhaustive)\n");

    auto psi = invoke({"homology", "--op", "psi-b", "--genus", "2", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(psi.out), nlohmann::json::parse(R"(["01","10"])"));
}

TEST(Cli, HomologyCapReported)
{
    auto r = invoke({"homology", "--op", "sqrt", "--genus", "9"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("capped at g = 8"), std::string::npos) << r.err;
}

TEST(Cli, UsageErrors)
{
    auto bad_type = invoke({"maxdeg", "--type", "C", "--genus", "3"});
    EXPECT_EQ(bad_type.code, 2);
    EXPECT_NE(bad_type.err.find("--type"), std::string::npos);

    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"maxdeg", "--type", "A"}).code, 2);
    EXPECT_EQ(invoke({"table", "exceptional", "--limit", "3000"}).code, 2);
    EXPECT_EQ(invoke({"exists", "--type", "A", "--genus", "3", "--surface-genus", "5"}).code, 2);
}

TEST(Cli, Primary)
{
    auto construct = invoke({"primary", "--type", "B", "--degree", "5", "--construct", "--g0", "0", "--m", "1"});
    EXPECT_EQ(construct.code, 0);
    EXPECT_EQ(construct.out, "B(5,0,(4,2);(4,5)) genus 4\n");

    auto refused = invoke({"primary", "--type", "B", "--degree", "9", "--construct", "--g0", "0", "--m", "1"});
    EXPECT_EQ(refused.code, 2);

    auto exists = invoke({"primary", "--type", "A", "--degree", "3", "--genus", "4"});
    EXPECT_EQ(exists.out, "false\n");
}

TEST(Cli, EnumerateClasses)
{
    auto r = invoke({"enumerate", "--type", "A", "--genus", "3", "--classes"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "A(3,1,(2,1);)\n");

    auto csv = invoke({"enumerate", "--type", "A", "--genus", "3", "--format", "csv"});
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "type,n,g0,a,b,cones");
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::string> args{"table", "census-b", "--limit", "100", "--format", "json", "--jobs", "3"};
    const auto first = invoke(args);
    EXPECT_EQ(first.code, 0);
    EXPECT_EQ(first.out, invoke(args).out);
    EXPECT_EQ(first.out, invoke({"table", "census-b", "--limit", "100", "--format", "json"}).out);
}

TEST(Cli, ExceptionalTableGolden)
{
    std::ifstream golden(DTROOTS_GOLDEN_DIR "/exceptional_500.csv");
    ASSERT_TRUE(golden);
    std::stringstream expected;
    expected << golden.rdbuf();
    auto r = invoke({"table", "exceptional", "--limit", "500", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, expected.str());
}

TEST(Cli, VerifyAll)
{
    auto r = invoke({"verify", "--suite", "all", "--limit", "200"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
