#include "commands.hpp"
#include "run_config.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fracbound::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("fracbound_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST(RunConfig, ValidationAggregates) {
    RunConfig c;
    c.command = "solve";
    c.alpha = 0.5;
    c.bc = "QQ";
    c.n = 1;
    c.initial = "sparkles";
    c.output_dir = scratch("bad").string();
    const auto err = validate(c);
    EXPECT_EQ(err.size(), 4u);
    std::ostringstream log;
    EXPECT_EQ(run(c, log), 2);
}

TEST(RunConfig, DeltaNeedsForward) {
    RunConfig c;
    c.command = "solve";
    c.direction = "backward";
    c.output_dir = scratch("dir").string();
    EXPECT_EQ(validate(c).size(), 1u);
    c.command = "simulate";
    c.initial = "uniform";
    EXPECT_FALSE(validate(c).empty());
}

TEST(RunConfig, JsonRoundTrip) {
    RunConfig c;
    c.command = "compare";
    c.alpha = 1.25;
    c.bc = "N*N";
    c.output_times = {0.1, 0.2};
    c.seed = 123456789012345ull;
    const RunConfig d = config_from_json(to_json(c));
    EXPECT_EQ(to_json(d), to_json(c));
    const RunConfig e = config_from_json("{\"config\": " + to_json(c) + ", \"seed\": 1}");
    EXPECT_EQ(e.seed, c.seed);
}

TEST(RunConfig, SnapshotTimes) {
    RunConfig c;
    c.t_final = 1.0;
    EXPECT_EQ(snapshot_times(c).size(), 11u);
    c.output_times = {0.5, 0.25, 0.5};
    EXPECT_EQ(snapshot_times(c), (std::vector<double>{0.25, 0.5, 1.0}));
}

TEST(Run, BuildMatrixWritesFilesAndManifest) {
    RunConfig c;
    c.command = "build-matrix";
    c.bc = "ND";
    c.n = 6;
    c.output_dir = scratch("bm").string();
    std::ostringstream log;
    ASSERT_EQ(run(c, log), 0) << log.str();
    const auto m = nlohmann::json::parse(slurp(fs::path(c.output_dir) / "manifest.json"));
    EXPECT_EQ(m.at("artifact_version"), 1);
    EXPECT_EQ(m.at("config").at("bc"), "ND");
    EXPECT_EQ(m.at("files").size(), 4u);
    for (const auto& f : m.at("files")) EXPECT_TRUE(fs::exists(fs::path(c.output_dir) / f.at("name").get<std::string>()));
}

TEST(Run, SolveTwiceIsByteIdentical) {
    RunConfig c;
    c.command = "solve";
    c.bc = "N*D";
    c.n = 16;
    c.initial = "poly:1,0,-1";
    c.output_dir = scratch("s1").string();
    std::ostringstream log;
    ASSERT_EQ(run(c, log), 0) << log.str();
    RunConfig d = config_from_json(slurp(fs::path(c.output_dir) / "manifest.json"));
    d.output_dir = scratch("s2").string();
    ASSERT_EQ(run(d, log), 0);
    for (const char* f : {"density.csv", "mass.csv"})
        EXPECT_EQ(slurp(fs::path(c.output_dir) / f), slurp(fs::path(d.output_dir) / f));
}

TEST(Run, VerifySuiteReportsJson) {
    RunConfig c;
    c.command = "verify";
    c.suite = "grunwald";
    c.output_dir = scratch("v").string();
    std::ostringstream log;
    EXPECT_EQ(run(c, log), 0) << log.str();
    const auto r = nlohmann::json::parse(slurp(fs::path(c.output_dir) / "report.json"));
    EXPECT_EQ(r.size(), 4u);
}

TEST(Run, InitialFromFile) {
    const fs::path dir = scratch("file");
    fs::create_directories(dir);
    {
        std::ofstream os(dir / "u0.csv");
        os << "x,value\n-1,0\n0,1\n1,0\n";
    }
    RunConfig c;
    c.command = "solve";
    c.n = 8;
    c.initial = "file:" + (dir / "u0.csv").string();
    c.output_dir = (dir / "out").string();
    std::ostringstream log;
    EXPECT_EQ(run(c, log), 0) << log.str();
}
