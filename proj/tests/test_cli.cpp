#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

#include "support.hpp"

namespace fs = std::filesystem;
using testing_support::data;
using nlohmann::json;

namespace {

struct Result {
    int status;
    std::string out;
};

const fs::path& scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "fuzzylat-cli-test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Result run(const std::string& args) {
    const auto out = scratch() / "stdout.txt";
    const std::string cmd = std::string(FUZZYLAT_CLI) + " " + args + " > " + out.string() + " 2> " +
                            (scratch() / "stderr.txt").string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, fuzzylat::io::read_file(out)};
}

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST(Cli, CheckTableOne) {
    const auto r = run("check " + q(data("x1.csv")));
    EXPECT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["lattice"]["bottom"], "w1");
    EXPECT_EQ(j["lattice"]["top"], "z1");
}

TEST(Cli, CheckTableThreeFails) {
    const auto r = run("check " + q(data("table3.json")));
    EXPECT_EQ(r.status, 1);
    const auto j = json::parse(r.out);
    EXPECT_FALSE(j["poset"]["passed"].get<bool>());
    EXPECT_EQ(j["poset"]["checks"][1]["law"], "transitive");
    EXPECT_FALSE(j["poset"]["checks"][1]["witnesses"].empty());
}

TEST(Cli, ProductMatchesTableTwo) {
    const auto out = (scratch() / "p.json").string();
    const auto r = run("product " + q(data("x1.json")) + " " + q(data("x2.json")) +
                       " --tnorm minimum --certify -o " + q(out));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["certification"]["bottom"], "w1w2");
    EXPECT_EQ(run("compare " + q(out) + " " + q(data("table2.json")) + " --tol 0").status, 0);
}

TEST(Cli, ProductToStdout) {
    const auto r = run("product " + q(data("x1.csv")) + " " + q(data("x2.csv")) +
                       " --tnorm lukasiewicz --format csv");
    EXPECT_EQ(r.status, 0);
    const auto f = fuzzylat::io::parse_csv(r.out);
    EXPECT_TRUE(fuzzylat::io::compare(f, fuzzylat::io::load(data("table3.json"))).passed());
}

TEST(Cli, ProductCertifyFailsForLukasiewicz) {
    const auto r = run("product " + q(data("x1.json")) + " " + q(data("x2.json")) +
                       " --tnorm lukasiewicz --certify -o " + q((scratch() / "l.json").string()));
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(json::parse(r.out)["certification"]["kind"], "NotPoset");
}

TEST(Cli, CompareReportsFirstDifference) {
    const auto r = run("compare " + q(data("table2.json")) + " " + q(data("table3.json")));
    EXPECT_EQ(r.status, 1);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["first_difference"]["row"], "w1w2");
    EXPECT_EQ(j["first_difference"]["col"], "x1x2");
}

TEST(Cli, MeetJoin) {
    auto r = run("meet " + q(data("table2.json")) + " x1x2 y1y2");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(json::parse(r.out)["meet"], "x1w2");
    r = run("join " + q(data("x2.json")) + " x2 y2");
    EXPECT_EQ(json::parse(r.out)["join"], "z2");
    EXPECT_EQ(run("meet " + q(data("x2.json")) + " x2 nope").status, 2);
}

TEST(Cli, WitnessIntransitivity) {
    const auto r = run("witness-intransitivity " + q(data("table3.json")));
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(json::parse(r.out)["witness"], (json{"w1w2", "x1w2", "x1x2"}));
    EXPECT_EQ(run("witness-intransitivity " + q(data("table2.json"))).status, 0);
}

TEST(Cli, Hom) {
    auto r = run("hom " + q(data("x1.json")) + " " + q(data("x2.json")) +
                 " --map '{\"w1\":\"w2\",\"x1\":\"x2\",\"y1\":\"x2\",\"z1\":\"z2\"}'");
    EXPECT_EQ(r.status, 0);
    r = run("hom " + q(data("x1.json")) + " " + q(data("x2.json")) +
            " --map '{\"w1\":\"z2\",\"x1\":\"z2\",\"y1\":\"z2\",\"z1\":\"w2\"}'");
    EXPECT_EQ(r.status, 1);
    const auto j = json::parse(r.out);
    EXPECT_FALSE(j["monotone"]["holds"].get<bool>());
    EXPECT_EQ(run("hom " + q(data("x1.json")) + " " + q(data("x2.json")) + " --map '{\"w1\":\"w2\"}'")
                  .status,
              2);
}

TEST(Cli, Verify) {
    auto r = run("verify --theorem Thm4_8 --trials 20 --seed 42");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(json::parse(r.out)["passed"].get<bool>());
    EXPECT_EQ(run("verify --theorem Thm4_8 --trials 0").status, 2);
    EXPECT_EQ(run("verify --theorem Nope --trials 3").status, 2);

    const auto dir = scratch() / "bundles";
    r = run("verify --theorem Thm4_8 --trials 3 --min-factors 3 --tnorm hamacher-paper-nary --bundle-dir " +
            q(dir.string()));
    EXPECT_EQ(r.status, 1);
    const auto j = json::parse(r.out);
    ASSERT_FALSE(j["bundles"].empty());
    const auto replay = run("replay " + q(j["bundles"][0].get<std::string>()));
    EXPECT_EQ(replay.status, 1);
    EXPECT_TRUE(json::parse(replay.out)["reproduces"].get<bool>());
}

TEST(Cli, Gen) {
    const auto out = (scratch() / "g.json").string();
    EXPECT_EQ(run("gen --config '{\"seed\": 5, \"kinds\": [\"M3\"]}' -o " + q(out)).status, 0);
    const auto f = fuzzylat::io::load(out);
    EXPECT_EQ(f.size(), 5);
    EXPECT_EQ(run("check " + q(out)).status, 0);
    const auto again = run("gen --config '{\"seed\": 5, \"kinds\": [\"M3\"]}'");
    EXPECT_TRUE(fuzzylat::io::parse_json(again.out).frame == f);
    EXPECT_EQ(run("gen --config '{not json'").status, 2);
}

TEST(Cli, TNorm) {
    const auto r = run("tnorm lukasiewicz --step 0.1");
    EXPECT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["zero_divisor"]["a"], 0.1);
    EXPECT_EQ(j["nilpotent"]["n"], 2);
    EXPECT_TRUE(json::parse(run("tnorm minimum").out)["zero_divisor"].is_null());
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("product " + q(data("x1.json")) + " --tnorm drastic").status, 2);
    EXPECT_EQ(run("check /nonexistent.json").status, 2);
    EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, BadGradeIsInputError) {
    const auto bad = scratch() / "bad.csv";
    fuzzylat::io::write_file(bad, "mu,a,b\na,1,1.2\nb,0,1\n");
    EXPECT_EQ(run("check " + q(bad.string())).status, 2);
}
