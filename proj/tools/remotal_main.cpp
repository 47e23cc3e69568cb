// remotal: command-line front end.
//
//   remotal profile --config c.json [--resolution N] [--output PATH] [--format csv|json]
//   remotal verify --seed S --trials N [--property NAME [--trial T]]
//   remotal reproduce linf-r2 --n-max 100 --resolution 1000000
//   remotal farthest --norm '{"kind":"lp","p":2,"dim":2}' --x 1,0 --delta 0.1
//
// Exit codes: 0 success, 1 validation error, 2 property failure,
// 3 acceptance mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "remotal/error.hpp"
#include "remotal/farthest.hpp"
#include "remotal/harness.hpp"
#include "remotal/propcheck.hpp"
#include "remotal/serialize.hpp"

namespace {

enum Exit { ok = 0, validation = 1, property_failure = 2, acceptance_mismatch = 3 };

remotal::Point parse_point(const std::string& text) {
  remotal::Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      p.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw remotal::Error(remotal::Errc::invalid_argument, "not a number: \"" + item + "\"", "x");
    }
  }
  if (p.empty()) throw remotal::Error(remotal::Errc::invalid_argument, "expected comma-separated coordinates", "x");
  return p;
}

remotal::Json parse_json_arg(const std::string& text, const char* field) {
  try {
    return remotal::Json::parse(text);
  } catch (const remotal::Json::parse_error& e) {
    throw remotal::Error(remotal::Errc::invalid_config, std::string("not valid JSON: ") + e.what(), field);
  }
}

int cmd_profile(const std::string& config_path, std::optional<std::size_t> resolution,
                std::optional<std::string> output, std::optional<std::string> format) {
  std::ifstream in(config_path);
  if (!in) throw remotal::Error(remotal::Errc::io, "cannot open " + config_path, "config");
  remotal::Json j = parse_json_arg(std::string(std::istreambuf_iterator<char>(in), {}), "config");
  // Flags override config fields; the override lands in the echoed config.
  if (j.is_object()) {
    if (resolution) j["resolution"] = *resolution;
    if (output) j["output"]["path"] = *output;
    if (format) j["output"]["format"] = *format;
  }
  const remotal::ExperimentConfig config = remotal::parse_config(j);
  const remotal::Report report = remotal::run_experiment(config);
  if (config.output.path.empty()) {
    std::cout << remotal::to_json(report).dump(2) << '\n';
  } else {
    std::cout << remotal::to_json(report, false).dump(2) << '\n';
  }
  bool failed = false;
  for (const auto& p : report.properties) failed = failed || p.failures != 0;
  return failed ? property_failure : ok;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, const std::string& property, std::optional<std::size_t> trial) {
  if (!property.empty() && trial) {
    const remotal::PropertyCase c = remotal::replay_case(property, seed, *trial);
    std::cout << remotal::to_json(c).dump() << '\n';
    return c.passed ? ok : property_failure;
  }
  std::vector<remotal::PropertySummary> summaries;
  if (property.empty()) {
    const remotal::SuiteSummary suite = remotal::run_property_suite(seed, trials);
    for (const auto& c : suite.cases) std::cout << remotal::to_json(c).dump() << '\n';
    summaries = suite.properties;
  } else {
    const remotal::PropertyCase probe = remotal::replay_case(property, seed, 0);  // validates the name
    (void)probe;
    std::vector<remotal::PropertyCase> cases;
    for (std::size_t t = 0; t < trials; ++t) cases.push_back(remotal::replay_case(property, seed, t));
    std::size_t failures = 0;
    for (const auto& c : cases) {
      std::cout << remotal::to_json(c).dump() << '\n';
      failures += c.passed ? 0 : 1;
    }
    summaries.push_back({property, trials, failures, {}});
  }
  bool failed = false;
  for (const auto& s : summaries) {
    std::fprintf(stderr, "%-18s trials=%zu failures=%zu\n", s.name.c_str(), s.trials, s.failures);
    failed = failed || s.failures != 0;
  }
  return failed ? property_failure : ok;
}

int cmd_reproduce(std::size_t n_max, std::size_t resolution) {
  const auto rows = remotal::reproduce_linf_r2(n_max, resolution);
  std::cout << "probe_x,probe_y,n,d,expected,abs_err,pass\n";
  bool all = true;
  for (const auto& r : rows) {
    std::cout << remotal::format_double(r.probe[0]) << ',' << remotal::format_double(r.probe[1]) << ',' << r.n << ','
              << remotal::format_double(r.d) << ',' << remotal::format_double(r.expected) << ','
              << remotal::format_double(r.abs_err) << ',' << (r.pass ? "true" : "false") << '\n';
    all = all && r.pass;
  }
  return all ? ok : acceptance_mismatch;
}

int cmd_farthest(const std::string& norm_text, const std::string& x_text, double delta, std::size_t resolution,
                 const std::string& set_path, bool nearest) {
  const remotal::NormSpec norm = remotal::norm_from_json(parse_json_arg(norm_text, "norm"), "norm");
  const remotal::Point x = parse_point(x_text);
  std::optional<remotal::PointSet> set;
  if (set_path.empty()) {
    set = remotal::sample_sphere(norm, resolution);
  } else {
    std::ifstream in(set_path);
    if (!in) throw remotal::Error(remotal::Errc::io, "cannot open " + set_path, "set");
    set = remotal::point_set_from_json(parse_json_arg(std::string(std::istreambuf_iterator<char>(in), {}), "set"));
  }
  remotal::Json out;
  if (nearest) {
    out = remotal::to_json(remotal::nearly_nearest_set(*set, x, norm, delta));
  } else {
    out = remotal::to_json(remotal::almost_farthest_set(*set, x, norm, delta));
  }
  remotal::Json pts = remotal::Json::array();
  for (std::size_t i : out["indices"]) pts.push_back(set->point(i));
  out["points"] = pts;
  out["norm"] = remotal::to_json(norm);
  std::cout << out.dump() << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"remotal: almost-farthest sets and rotundity diagnostics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", remotal::version());

  auto* profile = app.add_subcommand("profile", "run an experiment config");
  std::string config_path;
  std::optional<std::size_t> resolution_override;
  std::optional<std::string> output_override, format_override;
  profile->add_option("--config", config_path, "experiment config (JSON)")->required();
  profile->add_option("--resolution", resolution_override, "override config resolution");
  profile->add_option("--output", output_override, "override output.path");
  profile->add_option("--format", format_override, "override output.format (csv|json)");

  auto* verify = app.add_subcommand("verify", "run the property suite; JSON lines on stdout");
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string property;
  std::optional<std::size_t> trial;
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--trials", trials, "trials per property");
  verify->add_option("--property", property, "run one property only");
  verify->add_option("--trial", trial, "replay a single trial (needs --property)");

  auto* reproduce = app.add_subcommand("reproduce", "golden reproductions");
  reproduce->require_subcommand(1);
  auto* linf = reproduce->add_subcommand("linf-r2", "d(Q(x,1/n), Q(-x,1/n)) against 2(1-1/n) in (R^2, linf)");
  std::size_t n_max = 100;
  std::size_t repro_resolution = 1000000;
  linf->add_option("--n-max", n_max, "largest n");
  linf->add_option("--resolution", repro_resolution, "sphere sample size");

  auto* farthest = app.add_subcommand("farthest", "one-shot almost-farthest (or nearly-nearest) query");
  std::string norm_text, x_text, set_path;
  double delta = 0.0;
  std::size_t far_resolution = 1024;
  bool nearest = false;
  farthest->add_option("--norm", norm_text, "norm as JSON")->required();
  farthest->add_option("--x", x_text, "query point, comma separated")->required();
  farthest->add_option("--delta", delta, "slack delta >= 0");
  farthest->add_option("--resolution", far_resolution, "sphere sample size when --set is absent");
  farthest->add_option("--set", set_path, "point set JSON file instead of the unit sphere");
  farthest->add_flag("--nearest", nearest, "nearly best approximants P instead of Q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : validation;
  }

  try {
    if (profile->parsed()) return cmd_profile(config_path, resolution_override, output_override, format_override);
    if (verify->parsed()) return cmd_verify(seed, trials, property, trial);
    if (linf->parsed()) return cmd_reproduce(n_max, repro_resolution);
    if (farthest->parsed()) return cmd_farthest(norm_text, x_text, delta, far_resolution, set_path, nearest);
  } catch (const remotal::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return validation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return validation;
  }
  return validation;
}
