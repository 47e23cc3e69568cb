#include "remotal/harness.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <set>

#include "remotal/farthest.hpp"
#include "remotal/parallel.hpp"
#include "remotal/serialize.hpp"
#include "remotal/setmetrics.hpp"

#ifndef REMOTAL_VERSION
#define REMOTAL_VERSION "0.0.0"
#endif

namespace remotal {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& message) {
  throw Error(Errc::invalid_config, message, field);
}

std::uint64_t unsigned_field(const Json& j, const std::string& field) {
  // json built in C++ stores small literals as signed integers
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(field, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

double positive_field(const Json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "expected a number");
  const double v = j.get<double>();
  if (!(v > 0.0) || !std::isfinite(v)) bad(field, "must be positive and finite");
  return v;
}

ProfileKind profile_kind(const Json& j, const std::string& field) {
  if (!j.is_string()) bad(field, "expected a string");
  const auto s = j.get<std::string>();
  for (ProfileKind k : {ProfileKind::q_decay, ProfileKind::uniform, ProfileKind::gd_identity, ProfileKind::chebyshev}) {
    if (s == to_string(k)) return k;
  }
  bad(field, "unknown profile \"" + s + "\" (expected q_decay, uniform, gd_identity or chebyshev)");
}

std::vector<double> parse_schedule(const Json& j) {
  const std::string field = "delta_schedule";
  if (j.is_array()) {
    std::vector<double> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
      if (!j[k].is_number()) bad(field + "[" + std::to_string(k) + "]", "expected a number");
      out.push_back(j[k].get<double>());
    }
    return out;
  }
  if (!j.is_object()) bad(field, "expected a list of deltas or {\"kind\": \"one-over-n\", \"n_max\": N}");
  const auto kind = j.find("kind");
  if (kind == j.end()) bad(field + ".kind", "missing field");
  if (*kind != "one-over-n") bad(field + ".kind", "expected \"one-over-n\"");
  const auto n_max = j.find("n_max");
  if (n_max == j.end()) bad(field + ".n_max", "missing field");
  const std::uint64_t n = unsigned_field(*n_max, field + ".n_max");
  if (n == 0) bad(field + ".n_max", "must be at least 1");
  double scale = 1.0;
  if (const auto s = j.find("scale"); s != j.end()) scale = positive_field(*s, field + ".scale");
  return one_over_n_schedule(n, scale);
}

template <class Body>
double timed(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

PropertySummary summarize(const std::string& name, std::vector<PropertyCase> cases) {
  PropertySummary s{name, cases.size(), 0, {}};
  for (auto& c : cases) {
    if (!c.passed) {
      ++s.failures;
      s.failed.push_back(std::move(c));
    }
  }
  return s;
}

std::vector<PropertyCase> run_check(const std::string& name, std::uint64_t seed, std::size_t trials) {
  if (name == "qf_algebra") return check_qf_algebra(seed, trials);
  if (name == "union_lemma") return check_union_lemma(seed, trials);
  if (name == "containment_cont") return check_containment_cont(seed, trials);
  if (name == "farclose") return check_farclose(seed, trials);
  return check_gd_axioms(seed, trials);
}

}  // namespace

const char* version() { return REMOTAL_VERSION; }

ExperimentConfig parse_config(const Json& j) {
  if (!j.is_object()) bad("config", "expected a JSON object");
  static const std::set<std::string> known = {"norm",       "resolution", "scheme", "delta_schedule", "probes",
                                              "profiles",   "thresholds", "output", "verify"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) bad(key, "unknown field");
  }

  ExperimentConfig c;
  c.source = j;

  const auto norm = j.find("norm");
  if (norm == j.end()) bad("norm", "missing field");
  c.norm = norm_from_json(*norm, "norm");
  const std::size_t dim = c.norm.dim();

  const auto res = j.find("resolution");
  if (res == j.end()) bad("resolution", "missing field");
  c.resolution = unsigned_field(*res, "resolution");
  if (c.resolution < 3) bad("resolution", "must be at least 3");

  c.scheme = default_scheme(dim);
  if (const auto s = j.find("scheme"); s != j.end()) {
    c.scheme = scheme_from_json(*s, "scheme");
    if (std::holds_alternative<AngleGrid>(c.scheme) && dim != 2) bad("scheme.kind", "angle-grid requires dimension 2");
  }

  const auto sched = j.find("delta_schedule");
  if (sched == j.end()) bad("delta_schedule", "missing field");
  c.delta_schedule = parse_schedule(*sched);
  try {
    validate_schedule(c.delta_schedule, sampling_floor(c.norm, c.resolution, c.scheme));
  } catch (const Error& e) {
    if (e.code() == Errc::sampling_floor) throw;
    throw Error(Errc::invalid_config, e.what(), "delta_schedule");
  }

  const auto probes = j.find("probes");
  if (probes == j.end()) bad("probes", "missing field");
  if (probes->is_array()) {
    if (probes->empty()) bad("probes", "expected at least one probe");
    for (std::size_t k = 0; k < probes->size(); ++k) {
      const std::string field = "probes[" + std::to_string(k) + "]";
      Point p = point_from_json((*probes)[k], field);
      if (p.size() != dim) bad(field, "dimension does not match the norm");
      if (c.norm.eval(p) == 0.0) bad(field, "probe must be nonzero");
      c.probes.push_back(std::move(p));
    }
  } else if (probes->is_object()) {
    const auto count = probes->find("count");
    if (count == probes->end()) bad("probes.count", "missing field");
    const std::uint64_t n = unsigned_field(*count, "probes.count");
    if (n < kMinProbeCount) bad("probes.count", "must be at least " + std::to_string(kMinProbeCount));
    if (n > c.resolution) bad("probes.count", "exceeds the resolution");
    c.probe_count = n;
    const auto seed = probes->find("seed");
    if (seed == probes->end()) bad("probes.seed", "missing field");
    c.probe_seed = unsigned_field(*seed, "probes.seed");
  } else {
    bad("probes", "expected a list of points or {\"count\": N, \"seed\": S}");
  }

  if (const auto p = j.find("profiles"); p != j.end()) {
    if (!p->is_array() || p->empty()) bad("profiles", "expected a non-empty list");
    c.profiles.clear();
    for (std::size_t k = 0; k < p->size(); ++k) c.profiles.push_back(profile_kind((*p)[k], "profiles[" + std::to_string(k) + "]"));
  }
  const std::size_t probe_total = c.probe_count.value_or(c.probes.size());
  for (ProfileKind k : c.profiles) {
    if (k == ProfileKind::gd_identity && probe_total < 2) bad("probes", "gd_identity needs at least two probes");
  }

  if (const auto t = j.find("thresholds"); t != j.end()) {
    if (!t->is_object()) bad("thresholds", "expected an object");
    for (const auto& [key, value] : t->items()) {
      if (key == "lur_eps") {
        c.thresholds.lur_eps = positive_field(value, "thresholds.lur_eps");
      } else if (key == "tol") {
        c.thresholds.tol = positive_field(value, "thresholds.tol");
      } else {
        bad("thresholds." + key, "unknown field");
      }
    }
  }

  if (const auto o = j.find("output"); o != j.end()) {
    if (!o->is_object()) bad("output", "expected an object");
    if (const auto f = o->find("format"); f != o->end()) {
      if (!f->is_string() || (*f != "csv" && *f != "json")) bad("output.format", "expected \"csv\" or \"json\"");
      c.output.format = f->get<std::string>();
    }
    if (const auto p = o->find("path"); p != o->end()) {
      if (!p->is_string()) bad("output.path", "expected a string");
      c.output.path = p->get<std::string>();
    }
  }

  if (const auto v = j.find("verify"); v != j.end()) {
    if (!v->is_object()) bad("verify", "expected an object");
    VerifySpec spec;
    if (const auto s = v->find("seed"); s != v->end()) spec.seed = unsigned_field(*s, "verify.seed");
    if (const auto t = v->find("trials"); t != v->end()) spec.trials = unsigned_field(*t, "verify.trials");
    if (spec.trials == 0) bad("verify.trials", "must be at least 1");
    c.verify = spec;
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open config file " + path, "config");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::invalid_config, std::string("not valid JSON: ") + e.what(), "config");
  }
  return parse_config(j);
}

Report run_experiment(const ExperimentConfig& config) {
  Report report;
  report.config = config.source;
  report.toolkit_version = version();
  ProfileOptions options;
  options.scheme = config.scheme;

  report.wall_seconds = timed([&] {
    const std::vector<Point> probes =
        config.probe_count ? draw_probes(config.norm, *config.probe_count, config.resolution, config.probe_seed, options)
                           : config.probes;
    const auto& sched = config.delta_schedule;
    for (ProfileKind kind : config.profiles) {
      switch (kind) {
        case ProfileKind::q_decay:
          for (const Point& x : probes) report.profiles.push_back(q_decay_profile(config.norm, x, sched, config.resolution, options));
          break;
        case ProfileKind::chebyshev:
          for (const Point& x : probes) report.profiles.push_back(chebyshev_profile(config.norm, x, sched, config.resolution, options));
          break;
        case ProfileKind::gd_identity:
          for (std::size_t k = 0; k + 1 < probes.size(); ++k) {
            report.profiles.push_back(
                gd_identity_profile(config.norm, probes[k], probes[k + 1], sched, config.resolution, options));
          }
          break;
        case ProfileKind::uniform:
          report.profiles.push_back(config.probe_count ? uniform_decay_profile(config.norm, *config.probe_count, sched,
                                                                               config.resolution, config.probe_seed, options)
                                                       : uniform_decay_profile(config.norm, probes, sched,
                                                                               config.resolution, options));
          break;
      }
    }
    report.verdicts = classify(report.profiles, config.thresholds);
    if (config.verify) report.properties = run_property_suite(config.verify->seed, config.verify->trials).properties;
  });

  if (!config.output.path.empty()) write_outputs(report, config.output);
  return report;
}

Json to_json(const Report& report, bool with_profiles) {
  Json j;
  j["toolkit_version"] = report.toolkit_version;
  j["config"] = report.config;
  j["wall_seconds"] = report.wall_seconds;
  if (with_profiles) {
    Json profiles = Json::array();
    for (const auto& p : report.profiles) profiles.push_back(to_json(p));
    j["profiles"] = profiles;
  }
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = verdicts;
  Json props = Json::array();
  for (const auto& s : report.properties) {
    Json failed = Json::array();
    for (const auto& c : s.failed) failed.push_back(to_json(c));
    props.push_back({{"name", s.name}, {"trials", s.trials}, {"failures", s.failures}, {"failed", failed}});
  }
  j["properties"] = props;
  return j;
}

void write_outputs(const Report& report, const OutputSpec& output) {
  auto open = [](const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::io, "cannot write " + path, "output.path");
    return out;
  };
  if (output.format == "json") {
    auto out = open(output.path);
    out << to_json(report).dump(2) << '\n';
    return;
  }
  for (std::size_t k = 0; k < report.profiles.size(); ++k) {
    const DecayProfile& p = report.profiles[k];
    auto out = open(output.path + "_" + std::to_string(k) + "_" + to_string(p.kind) + ".csv");
    write_csv(out, p);
  }
  auto out = open(output.path + "_report.json");
  out << to_json(report, false).dump(2) << '\n';
}

std::vector<LinfRow> reproduce_linf_r2(std::size_t n_max, std::size_t resolution, std::vector<Point> probes) {
  if (n_max == 0) throw Error(Errc::invalid_argument, "n_max must be at least 1", "n_max");
  const NormSpec norm = NormSpec::lp(kInfinity, 2);
  for (const Point& x : probes) {
    if (x.size() != 2) throw Error(Errc::dimension_mismatch, "probes live in R^2", "probes");
    if (std::abs(norm.eval(x) - 1.0) > 1e-12) throw Error(Errc::invalid_argument, "probes must lie on the unit sphere", "probes");
  }
  const PointSet s = sample_sphere(norm, resolution, AngleGrid{});
  const double floor = sampling_floor(s);
  if (!(floor < 1.0 / static_cast<double>(n_max))) {
    throw Error(Errc::sampling_floor,
                "sampling floor " + std::to_string(floor) + " is not below 1/n_max; raise the resolution", "resolution");
  }

  std::vector<LinfRow> rows;
  for (const Point& x : probes) {
    const FarthestScan forward(s, x, norm);
    const Point minus{-x[0], -x[1]};
    const FarthestScan backward(s, minus, norm);
    std::vector<LinfRow> block(n_max);
    parallel_for(n_max, [&](std::size_t k) {
      const std::size_t n = k + 1;
      const double delta = 1.0 / static_cast<double>(n);
      const PointSet q = select(s, forward.at(delta).indices);
      const PointSet q_neg = select(s, backward.at(delta).indices);
      LinfRow& r = block[k];
      r.probe = x;
      r.n = n;
      r.d = infimal_distance(q, q_neg, norm).value;
      r.expected = 2.0 * (1.0 - delta);
      r.abs_err = std::abs(r.d - r.expected);
      r.pass = r.abs_err <= kLinfTolerance;
    });
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

bool SuiteSummary::all_passed() const {
  for (const auto& p : properties) {
    if (p.failures != 0) return false;
  }
  return true;
}

SuiteSummary run_property_suite(std::uint64_t seed, std::size_t trials_per_property) {
  if (trials_per_property == 0) throw Error(Errc::invalid_argument, "trials must be at least 1", "trials");
  SuiteSummary out;
  out.seed = seed;
  out.trials_per_property = trials_per_property;
  for (const std::string& name : property_names()) {
    std::vector<PropertyCase> cases = run_check(name, seed, trials_per_property);
    out.cases.insert(out.cases.end(), cases.begin(), cases.end());
    out.properties.push_back(summarize(name, std::move(cases)));
  }
  return out;
}

}  // namespace remotal
