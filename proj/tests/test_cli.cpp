#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sys/wait.h>

#include "digifix/contraction.hpp"
#include "digifix/errors.hpp"
#include "digifix/io.hpp"
#include "digifix/scc.hpp"
#include "digifix/suite.hpp"
#include "fixtures.hpp"

using namespace digifix;
using digifix::fixtures::five_dim_example;
using digifix::fixtures::five_dim_map;

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DIGIFIX_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("digifix_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("image.json", image_to_json(five_dim_example()));
    write("map.json", map_to_json(five_dim_map()));
    write("identity.json", map_to_json(SelfMap::identity(3)));
    write("const2.json", map_to_json(SelfMap::constant(3, 2)));
    write("const0.json", map_to_json(SelfMap::constant(3, 0)));
    write("short.json", json{{"table", {0, 1}}});
    std::ofstream(dir_ / "broken.json") << "{\"dim\": 2, ";
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const json& j) { std::ofstream(dir_ / name) << j.dump(); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Io, ImageRoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto img = fixtures::random_image(rng, 3, 4, 12, 1 + trial % 3);
    const auto back = image_from_json(json::parse(image_to_json(img).dump()));
    EXPECT_EQ(back.points(), img.points());
    EXPECT_EQ(back.adjacency().u, img.adjacency().u);
  }
}

TEST(Io, MapRoundTripAndValidation) {
  const auto img = five_dim_example();
  EXPECT_EQ(map_from_json(map_to_json(five_dim_map()), img), five_dim_map());
  EXPECT_THROW(map_from_json(json{{"table", {0, 1}}}, img), InputError);
  EXPECT_THROW(map_from_json(json{{"table", {0, 1, 7}}}, img), InputError);
  EXPECT_THROW(map_from_json(json{{"tabel", {0, 1, 2}}}, img), InputError);
}

TEST(Io, MalformedImages) {
  EXPECT_THROW(image_from_json(json{{"dim", 2}, {"points", {{0, 0}}}}), InputError);
  EXPECT_THROW(image_from_json(json{{"dim", 2}, {"adjacency", {{"cu", 1}}}, {"points", {{0, 0}, {0, 0}}}}), InputError);
  EXPECT_THROW(image_from_json(json{{"dim", 2}, {"adjacency", {{"cu", 1}}}, {"points", {{0, "a"}}}}), InputError);
}

TEST(Io, ReportKeys) {
  const auto j = to_json(classify(Metric::l2(), five_dim_example(), five_dim_map()));
  for (const char* key : {"gamma_star", "is_banach", "kannan_k_star", "is_kannan", "reich_feasible", "reich_witness",
                          "reich_universal", "continuous", "constant"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["gamma_star_power_ratio"], json::array({4, 5}));
  const auto id = to_json(classify(Metric::l2(), five_dim_example(), SelfMap::identity(3)));
  EXPECT_EQ(id["kannan_k_star"], "infeasible");
  EXPECT_TRUE(id["reich_witness"].is_null());
}

TEST(Io, SccResultRoundTripsToACurve) {
  const auto r = find_scc(2, 2, 7, Window::parse("5x5"));
  const json j = json::parse(to_json(r).dump());
  json img{{"dim", 2}, {"adjacency", {{"cu", 2}}}, {"points", j["curve"]}};
  EXPECT_TRUE(is_simple_closed_curve(image_from_json(img)));
}

TEST(Suite, UnknownScenarioIsAnInputError) {
  EXPECT_THROW(run_scenario("S11"), InputError);
  SuiteOptions opts;
  opts.only = {"S1", "bogus"};
  EXPECT_THROW(run_paper_suite(opts), InputError);
}

TEST(Suite, ScenarioFailsIffAnAssertionFails) {
  for (const auto& o : run_paper_suite()) {
    const bool any_failed =
        std::any_of(o.assertions.begin(), o.assertions.end(), [](const Assertion& a) { return !a.pass; });
    if (o.status != ScenarioStatus::Inconclusive) EXPECT_EQ(o.pass(), !any_failed) << o.id;
    for (const auto& a : o.assertions) {
      EXPECT_TRUE(a.provenance == "reported" || a.provenance == "derived" || a.provenance == "trivial");
    }
  }
}

TEST(Suite, DeterministicReports) {
  json first = json::array(), second = json::array();
  for (const auto& o : run_paper_suite()) first.push_back(to_json(o));
  for (const auto& o : run_paper_suite()) second.push_back(to_json(o));
  EXPECT_EQ(first.dump(), second.dump());
}

TEST(Suite, SeededSpotChecksOnlyWithSeed) {
  SuiteOptions opts;
  opts.only = {"S5"};
  EXPECT_FALSE(run_paper_suite(opts).front().caps.contains("seed"));
  opts.seed = 99;
  const auto seeded = run_paper_suite(opts).front();
  EXPECT_TRUE(seeded.pass());
  EXPECT_EQ(seeded.caps["seed"], 99);
}

TEST_F(CliFiles, ClassifyFiveDimExample) {
  const auto r = run_cli("map classify --image " + path("image.json") + " --map " + path("map.json") + " --metric l2");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_TRUE(j["is_banach"].get<bool>());
  EXPECT_FALSE(j["continuous"].get<bool>());
  EXPECT_NEAR(j["gamma_star"].get<double>(), 2.0 / std::sqrt(5.0), 1e-12);
}

TEST_F(CliFiles, ClassifyIdentity) {
  const auto r = run_cli("map classify --image " + path("image.json") + " --map " + path("identity.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(json::parse(r.out)["is_banach"].get<bool>());
}

TEST_F(CliFiles, Complexity) {
  const auto r = run_cli("complexity --image " + path("image.json") + " --metric l2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["c_sharp"], 2);
  EXPECT_EQ(run_cli("complexity --image " + path("image.json") + " --cap 2").code, 2);
}

TEST_F(CliFiles, ImageCommands) {
  EXPECT_EQ(run_cli("image validate --image " + path("image.json")).code, 0);
  EXPECT_EQ(run_cli("image validate --image " + path("broken.json")).code, 2);
  EXPECT_EQ(run_cli("image validate --image " + path("missing.json")).code, 2);
  const auto info = run_cli("image info --image " + path("image.json"));
  ASSERT_EQ(info.code, 0);
  EXPECT_TRUE(json::parse(info.out)["uniformly_connected"].get<bool>());
}

TEST_F(CliFiles, MapInputErrors) {
  EXPECT_EQ(run_cli("map fixpoints --image " + path("image.json") + " --map " + path("short.json")).code, 2);
  EXPECT_EQ(run_cli("map classify --image " + path("image.json") + " --map " + path("map.json") + " --metric linf").code,
            2);
  EXPECT_EQ(run_cli("map frobnicate").code, 2);
}

TEST_F(CliFiles, IterateAndFixpoints) {
  const auto fix = run_cli("map fixpoints --image " + path("image.json") + " --map " + path("map.json"));
  ASSERT_EQ(fix.code, 0);
  EXPECT_EQ(json::parse(fix.out)["fixed_points"], json::array({0}));
  const auto it = run_cli("map iterate --image " + path("image.json") + " --map " + path("map.json"));
  ASSERT_EQ(it.code, 0);
  EXPECT_EQ(json::parse(it.out)["collapse"]["steps"], 2);
}

TEST_F(CliFiles, PairPremiseViolationExitsOne) {
  const auto bad = run_cli("pair saluja --image " + path("image.json") + " --j " + path("identity.json") + " --k " +
                           path("identity.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(json::parse(bad.out).contains("violated"));
  const auto ok = run_cli("pair saluja --image " + path("image.json") + " --j " + path("const2.json") + " --k " +
                          path("identity.json") + " --xi 0.5,0,0");
  ASSERT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["fixed_point"], 2);
}

TEST_F(CliFiles, QuadAndPairCheck) {
  const auto q = run_cli("quad saljhade --image " + path("image.json") + " --j " + path("const0.json") + " --k " +
                         path("const0.json") + " --l " + path("identity.json") + " --m " + path("identity.json") +
                         " --xi 0.5");
  ASSERT_EQ(q.code, 0);
  EXPECT_EQ(json::parse(q.out)["sigma"], 0);
  const auto p = run_cli("pair check --image " + path("image.json") + " --j " + path("identity.json") + " --k " +
                         path("const2.json"));
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(json::parse(p.out)["weakly_compatible"].get<bool>());
}

TEST_F(CliFiles, SccCommands) {
  const auto found = run_cli("scc find --dim 2 --u 2 --len 7 --window 5x5");
  ASSERT_EQ(found.code, 0);
  const auto curve = json::parse(found.out)["curve"];
  EXPECT_EQ(curve.size(), 7u);
  write("curve.json", json{{"dim", 2}, {"adjacency", {{"cu", 2}}}, {"points", curve}});
  EXPECT_EQ(run_cli("scc check --image " + path("curve.json")).code, 0);
  EXPECT_EQ(run_cli("scc check --image " + path("image.json")).code, 2);  // fewer than 4 points
  EXPECT_EQ(run_cli("scc find --dim 2 --u 2 --len 3 --window 5x5").code, 2);
  EXPECT_EQ(run_cli("scc find --dim 2 --u 1 --len 5 --window 5x5").code, 1);
}

TEST(Cli, PaperSuiteOnlyS1) {
  const auto r = run_cli("paper-suite --only S1");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["scenario"], "S1");
  EXPECT_TRUE(j[0]["pass"].get<bool>());
  EXPECT_EQ(run_cli("paper-suite --only S99").code, 2);
}

TEST(Cli, PaperSuiteIsByteIdentical) {
  const auto a = run_cli("paper-suite");
  const auto b = run_cli("paper-suite");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
