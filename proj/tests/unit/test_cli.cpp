#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "flasque/cli.hpp"
#include "flasque/serialize.hpp"

using namespace flasque;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "flasque");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, ClassifyExamples) {
    auto r = run_cli({"classify", "S", "6", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["verdict"], "NotPRetractRational");
    EXPECT_NE(r.out.find("Prop evenS"), std::string::npos);

    r = run_cli({"classify", "A", "7", "all"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["verdict"], "RetractRational");

    r = run_cli({"classify", "S", "6", "5"});
    EXPECT_EQ(Json::parse(r.out)["verdict"], "PRetractRational");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"classify", "X", "6", "2"}).code, 2);
    EXPECT_EQ(run_cli({"classify", "S", "6", "4"}).code, 2);
    EXPECT_EQ(run_cli({"classify", "A", "3", "2"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--primes", "2,4"}).code, 2);
    EXPECT_EQ(run_cli({"table", "--cutoff", "0"}).code, 2);
    EXPECT_EQ(run_cli({"verify-paper", "--inject-fault", "nonsense"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, TableFormats) {
    auto csv = run_cli({"table", "--format", "csv", "--max-n", "8"});
    ASSERT_EQ(csv.code, 0);
    auto cells = cli::parse_table_csv(csv.out);
    EXPECT_EQ(cli::render_table(cells, cli::Format::Csv), csv.out);
    cli::RunConfig cfg;
    cfg.max_n = 8;
    EXPECT_EQ(cells, cli::compute_table(cfg));

    auto md = run_cli({"table", "--format", "markdown", "--max-n", "6", "--primes", "2,3"});
    EXPECT_NE(md.out.find("| 6 | no (evenS) | no (oddprimeS) |"), std::string::npos) << md.out;

    auto empty = run_cli({"table", "--primes", "", "--format", "csv"});
    EXPECT_EQ(empty.code, 0);
    EXPECT_EQ(empty.out, "family,n,p,p_retract_rational,closed_form,engine,certificate\n");
}

TEST(Cli, TableIndependentOfJobs) {
    cli::RunConfig one;
    one.max_n = 9;
    cli::RunConfig four = one;
    four.jobs = 4;
    EXPECT_EQ(cli::compute_table(one), cli::compute_table(four));
}

TEST(Cli, VerifyPaperSmallBound) {
    auto r = run_cli({"verify-paper", "--max-n", "6", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["failures"], 0);
    for (const auto& c : j["checks"]) {
        std::string name = c["check"];
        for (const char* big : {"(S,8,", "(S,9,", "(A,8,", "n=8"}) EXPECT_EQ(name.find(big), std::string::npos) << name;
    }
}

TEST(Cli, VerifyPaperFaultInjection) {
    auto r = run_cli({"verify-paper", "--max-n", "6", "--format", "markdown", "--inject-fault", "oddprimeS"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL decomposition oddprimeS"), std::string::npos) << r.out;
}

TEST(Cli, ResolveAndCohomology) {
    auto sign = temp_file("sign.json", R"j({"degree":2,"generators":["(1 2)"],"construct":"sign"})j");
    auto r = run_cli({"resolve", sign});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j["ranks"]["M"], 1);
    EXPECT_EQ(j["ranks"]["P"], 2);
    EXPECT_EQ(j["ranks"]["F"], 1);
    EXPECT_EQ(j["exact"], true);

    auto z = temp_file("z3.json", R"j({"family":"S","n":3,"construct":"permutation"})j");
    r = run_cli({"cohomology", z, "--subgroup", "(1 2 3)", "--degree", "-1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out)["cohomology"][0]["trivial"], true);

    auto bad = temp_file("bad.json", "{\"degree\": 2,");
    r = run_cli({"resolve", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("parse error"), std::string::npos);
    EXPECT_EQ(run_cli({"resolve", "/nonexistent/file.json"}).code, 2);
}
