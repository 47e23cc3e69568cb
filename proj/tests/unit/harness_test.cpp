#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "remotal/harness.hpp"
#include "remotal/serialize.hpp"

using namespace remotal;

namespace {

Json base_config() {
  return Json::parse(R"({
    "norm": {"kind": "lp", "p": 2, "dim": 2},
    "resolution": 100000,
    "delta_schedule": {"kind": "one-over-n", "n_max": 100},
    "probes": [[1, 0], [0.6, 0.8]]
  })");
}

std::string error_field(const Json& j) {
  try {
    parse_config(j);
  } catch (const Error& e) {
    return e.field();
  }
  return "<accepted>";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  CHECK(error_field(base_config()) == "<accepted>");
  Json j = base_config();
  j["norm"]["p"] = 0.5;
  CHECK(error_field(j) == "norm.p");
  j = base_config();
  j["norm"] = {{"kind", "banana"}};
  CHECK(error_field(j) == "norm.kind");
  j = base_config();
  j.erase("resolution");
  CHECK(error_field(j) == "resolution");
  j = base_config();
  j["delta_schedule"] = {0.1, 0.2};
  CHECK(error_field(j) == "delta_schedule");
  j = base_config();
  j["probes"] = {{1, 0, 0}};
  CHECK(error_field(j) == "probes[0]");
  j = base_config();
  j["probes"] = {{0, 0}};
  CHECK(error_field(j) == "probes[0]");
  j = base_config();
  j["probes"] = {{"count", 3}, {"seed", 1}};
  CHECK(error_field(j) == "probes.count");
  j = base_config();
  j["output"] = {{"format", "xml"}};
  CHECK(error_field(j) == "output.format");
  j = base_config();
  j["thresholds"] = {{"lur_eps", -1}};
  CHECK(error_field(j) == "thresholds.lur_eps");
  j = base_config();
  j["verify"] = {{"trials", 0}};
  CHECK(error_field(j) == "verify.trials");
  j = base_config();
  j["colour"] = "red";
  CHECK(error_field(j) == "colour");
  j = base_config();
  j["probes"] = {{1, 0}};
  j["profiles"] = {"gd_identity"};
  CHECK(error_field(j) == "probes");
}

TEST_CASE("schedules below the sampling floor are refused") {
  Json j = base_config();
  j["resolution"] = 1000;
  j["delta_schedule"] = {0.1, 1e-3};
  try {
    parse_config(j);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::sampling_floor);
  }
}

TEST_CASE("euclidean experiment decays, max-norm experiment stalls") {
  const Report l2 = run_experiment(parse_config(base_config()));
  REQUIRE(l2.profiles.size() == 3);  // two pointwise, one uniform
  for (const auto& p : l2.profiles) CHECK(p.rows.back().q_diam < p.rows.front().q_diam);
  CHECK(l2.toolkit_version == version());
  CHECK(l2.config == base_config());

  Json j = base_config();
  j["norm"] = {{"kind", "lp"}, {"p", "inf"}, {"dim", 2}};
  j["delta_schedule"] = {{"kind", "one-over-n"}, {"n_max", 20}};
  j["probes"] = {{"count", 8}, {"seed", 4}};
  const Report box = run_experiment(parse_config(j));
  for (const auto& p : box.profiles)
    for (const auto& row : p.rows) CHECK(std::abs(row.q_diam - 2.0) <= 1e-6);
  bool not_ur = false;
  for (const auto& v : box.verdicts) not_ur = not_ur || v.kind == VerdictKind::not_ur;
  CHECK(not_ur);
}

TEST_CASE("csv output is byte-identical across runs") {
  const auto dir = std::filesystem::temp_directory_path() / "remotal_harness_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  Json j = base_config();
  j["profiles"] = {"q_decay", "uniform", "gd_identity", "chebyshev"};
  j["delta_schedule"] = {{"kind", "one-over-n"}, {"n_max", 30}};
  j["output"] = {{"format", "csv"}, {"path", (dir / "a").string()}};
  const Json config_a = j;
  run_experiment(parse_config(j));
  j["output"]["path"] = (dir / "b").string();
  run_experiment(parse_config(j));
  std::size_t compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("a_", 0) != 0 || entry.path().extension() != ".csv") continue;
    const std::string a = slurp(entry.path());
    CHECK(a.rfind(kProfileCsvHeader, 0) == 0);
    CHECK(a == slurp(dir / ("b_" + name.substr(2))));
    ++compared;
  }
  CHECK(compared == 6);  // 2 q_decay, 1 uniform, 1 gd_identity, 2 chebyshev
  CHECK(std::filesystem::exists(dir / "a_report.json"));
  const Json report = Json::parse(slurp(dir / "a_report.json"));
  CHECK(report.contains("verdicts"));
  CHECK(report.at("config") == config_a);
  std::filesystem::remove_all(dir);
}

TEST_CASE("report json round-trips doubles at full precision") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("golden max-norm table, coarse") {
  const auto rows = reproduce_linf_r2(10, 100000);
  REQUIRE(rows.size() == 20);
  for (const auto& r : rows) CHECK(r.expected == 2.0 * (1.0 - 1.0 / double(r.n)));
  CHECK(rows[0].n == 1);
  CHECK(rows[0].expected == 0.0);
  CHECK(rows[1].expected == 1.0);
  CHECK(rows[9].d == doctest::Approx(1.8).epsilon(1e-3));
  CHECK_THROWS_AS(reproduce_linf_r2(100, 100), Error);
  CHECK_THROWS_AS(reproduce_linf_r2(0, 1000), Error);
}

TEST_CASE("verify section runs the suite") {
  Json j = base_config();
  j["delta_schedule"] = {0.1, 0.05};
  j["verify"] = {{"seed", 2}, {"trials", 20}};
  const Report r = run_experiment(parse_config(j));
  REQUIRE(r.properties.size() == 5);
  for (const auto& p : r.properties) CHECK(p.failures == 0);
}
