#pragma once

// Declarative experiments over decay profiles and property checks.
//
// A config is JSON:
//
//   {
//     "norm": {"kind": "lp", "p": 2, "dim": 2},
//     "resolution": 100000,
//     "scheme": {"kind": "angle-grid"},                     optional
//     "delta_schedule": {"kind": "one-over-n", "n_max": 100, "scale": 1}
//                     | [0.5, 0.25, ...],
//     "probes": [[1, 0], [0, 1]] | {"count": 16, "seed": 7},
//     "profiles": ["q_decay", "uniform", "gd_identity", "chebyshev"],  optional
//     "thresholds": {"lur_eps": 0.05, "tol": 0.05},           optional
//     "output": {"format": "csv" | "json", "path": "out"},   optional
//     "verify": {"seed": 1, "trials": 100}                   optional
//   }
//
// Explicit probes feed q_decay and chebyshev one profile each, gd_identity
// one profile per consecutive pair, and a single uniform profile over all
// of them. {count, seed} probes are drawn from the sphere sample exactly as
// uniform_decay_profile draws them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "remotal/diagnostics.hpp"
#include "remotal/norms.hpp"
#include "remotal/propcheck.hpp"
#include "remotal/sets.hpp"

namespace remotal {

const char* version();

// Smallest probe count accepted in a {count, seed} config.
inline constexpr std::size_t kMinProbeCount = 8;

struct OutputSpec {
  std::string format = "csv";  // "csv" or "json"
  std::string path;            // empty: nothing written
};

struct VerifySpec {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
};

struct ExperimentConfig {
  NormSpec norm = NormSpec::lp(2.0, 2);
  std::size_t resolution = 0;
  SamplingScheme scheme = AngleGrid{};
  std::vector<double> delta_schedule;
  std::vector<Point> probes;                 // explicit probes
  std::optional<std::size_t> probe_count;    // or drawn probes
  std::uint64_t probe_seed = 0;
  std::vector<ProfileKind> profiles = {ProfileKind::q_decay, ProfileKind::uniform};
  Thresholds thresholds;
  OutputSpec output;
  std::optional<VerifySpec> verify;
  // The config as given, echoed into the report.
  nlohmann::json source;
};

// Field-level validation: every error names the offending field, e.g.
// "norm.p: must be >= 1". Throws Error with code invalid_config or
// sampling_floor.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

struct PropertySummary {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<PropertyCase> failed;
};

struct Report {
  nlohmann::json config;
  std::vector<DecayProfile> profiles;
  std::vector<Verdict> verdicts;
  std::vector<PropertySummary> properties;
  double wall_seconds = 0.0;
  std::string toolkit_version;
};

// Runs the profiles (and the property suite when "verify" is present),
// classifies, and writes the outputs named in config.output:
//   csv:  <path>_<k>_<kind>.csv per profile and <path>_report.json
//   json: <path> holding the whole report
Report run_experiment(const ExperimentConfig& config);

// The JSON form of a report, numeric content at full precision.
nlohmann::json to_json(const Report& report, bool with_profiles = true);

void write_outputs(const Report& report, const OutputSpec& output);

struct LinfRow {
  Point probe;
  std::size_t n = 0;
  double d = 0.0;
  double expected = 0.0;
  double abs_err = 0.0;
  bool pass = false;
};

inline constexpr double kLinfTolerance = 1e-3;

// For (R^2, linf) and probes (1, 0) and (1, 0.5): d(Q_S(x, 1/n), Q_S(-x, 1/n))
// against 2(1 - 1/n) for n = 1..n_max. Throws sampling_floor when the floor
// of the sample is not below 1/n_max.
std::vector<LinfRow> reproduce_linf_r2(std::size_t n_max, std::size_t resolution,
                                       std::vector<Point> probes = {{1.0, 0.0}, {1.0, 0.5}});

struct SuiteSummary {
  std::uint64_t seed = 0;
  std::size_t trials_per_property = 0;
  std::vector<PropertySummary> properties;
  std::vector<PropertyCase> cases;  // every case, suite order then trial order
  bool all_passed() const;
};

SuiteSummary run_property_suite(std::uint64_t seed, std::size_t trials_per_property);

}  // namespace remotal
