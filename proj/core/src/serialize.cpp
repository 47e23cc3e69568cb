#include "remotal/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace remotal {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& message) {
  throw Error(Errc::invalid_config, message, path);
}

const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing field");
  return *it;
}

double number(const Json& j, const std::string& path) {
  if (!j.is_number()) bad(path, "expected a number");
  return j.get<double>();
}

double p_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity" || s == "infinity") return kInfinity;
    bad(path, "expected a number or \"inf\"");
  }
  const double p = number(j, path);
  if (!(p >= 1.0)) bad(path, "must be >= 1");
  return p;
}

Json p_to_json(double p) {
  if (std::isinf(p)) return "inf";
  return p;
}

std::vector<double> numbers(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(number(j[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

Json points_json(const PointSet& set) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = set[i];
    pts.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return pts;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const NormSpec& norm) {
  switch (norm.kind()) {
    case NormKind::lp:
      return {{"kind", "lp"}, {"p", p_to_json(norm.p())}, {"dim", norm.dim()}};
    case NormKind::weighted_lp:
      return {{"kind", "wlp"}, {"p", p_to_json(norm.p())}, {"weights", norm.weights()}};
    case NormKind::polyhedral:
      return {{"kind", "poly"}, {"vertices", norm.vertices()}};
  }
  return {};
}

NormSpec norm_from_json(const Json& j, const std::string& path) {
  const Json& kind = require(j, "kind", path);
  if (!kind.is_string()) bad(path + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  try {
    if (k == "lp") {
      const double p = p_from_json(require(j, "p", path), path + ".p");
      const double dim = number(require(j, "dim", path), path + ".dim");
      if (!(dim >= 1.0) || dim != std::floor(dim)) bad(path + ".dim", "must be a positive integer");
      return NormSpec::lp(p, static_cast<std::size_t>(dim));
    }
    if (k == "wlp") {
      const double p = p_from_json(require(j, "p", path), path + ".p");
      auto weights = numbers(require(j, "weights", path), path + ".weights");
      if (const auto it = j.find("dim"); it != j.end() && number(*it, path + ".dim") != static_cast<double>(weights.size())) {
        bad(path + ".dim", "does not match the number of weights");
      }
      return NormSpec::weighted_lp(p, std::move(weights));
    }
    if (k == "poly") {
      const Json& verts = require(j, "vertices", path);
      if (!verts.is_array() || verts.empty()) bad(path + ".vertices", "expected a non-empty array of points");
      std::vector<Point> vertices;
      for (std::size_t v = 0; v < verts.size(); ++v) {
        vertices.push_back(numbers(verts[v], path + ".vertices[" + std::to_string(v) + "]"));
      }
      if (const auto it = j.find("dim"); it != j.end() && number(*it, path + ".dim") != static_cast<double>(vertices.front().size())) {
        bad(path + ".dim", "does not match the vertex dimension");
      }
      return NormSpec::polyhedral(std::move(vertices));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_config) throw;
    throw Error(Errc::invalid_config, e.what(), path);
  }
  bad(path + ".kind", "unknown norm kind \"" + k + "\" (expected lp, wlp or poly)");
}

Json to_json(const SamplingScheme& scheme) {
  if (std::holds_alternative<AngleGrid>(scheme)) return {{"kind", "angle-grid"}};
  return {{"kind", "seeded"}, {"seed", std::get<SeededDirections>(scheme).seed}};
}

SamplingScheme scheme_from_json(const Json& j, const std::string& path) {
  const Json& kind = require(j, "kind", path);
  if (kind == "angle-grid") return AngleGrid{};
  if (kind == "seeded") {
    const Json& seed = require(j, "seed", path);
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      bad(path + ".seed", "expected a non-negative integer");
    }
    return SeededDirections{seed.get<std::uint64_t>()};
  }
  bad(path + ".kind", "expected \"angle-grid\" or \"seeded\"");
}

Json to_json(const Provenance& provenance) {
  return std::visit(
      [](const auto& tag) -> Json {
        using T = std::decay_t<decltype(tag)>;
        if constexpr (std::is_same_v<T, FreeForm>) {
          return {{"kind", "free"}, {"note", tag.note}};
        } else if constexpr (std::is_same_v<T, SphereSample>) {
          return {{"kind", "sphere"}, {"norm", to_json(tag.norm)}, {"resolution", tag.resolution}, {"scheme", to_json(tag.scheme)}};
        } else if constexpr (std::is_same_v<T, BallSample>) {
          return {{"kind", "ball"}, {"norm", to_json(tag.norm)}, {"resolution", tag.resolution},
                  {"scheme", to_json(tag.scheme)}, {"rings", tag.rings}};
        } else {
          Json parents = Json::array();
          for (const auto& p : tag.parents) parents.push_back(to_json(*p));
          return {{"kind", "derived"}, {"op", tag.op}, {"parents", parents}};
        }
      },
      provenance.tag);
}

Json to_json(const PointSet& set) {
  return {{"dim", set.dim()}, {"points", points_json(set)}, {"provenance", to_json(set.provenance())}};
}

PointSet point_set_from_json(const Json& j, const std::string& path) {
  const Json& pts = require(j, "points", path);
  if (!pts.is_array() || pts.empty()) bad(path + ".points", "expected a non-empty array of points");
  std::vector<Point> points;
  for (std::size_t k = 0; k < pts.size(); ++k) points.push_back(numbers(pts[k], path + ".points[" + std::to_string(k) + "]"));
  if (const auto it = j.find("dim"); it != j.end() && number(*it, path + ".dim") != static_cast<double>(points.front().size())) {
    bad(path + ".dim", "does not match the point dimension");
  }
  try {
    // Provenance is informational on input; sets read from disk are free-form.
    return PointSet::from_points(points, Provenance{FreeForm{"json"}});
  } catch (const Error& e) {
    throw Error(Errc::invalid_config, e.what(), path + ".points");
  }
}

Json to_json(const FarthestResult& r) {
  return {{"radius", r.radius}, {"delta", r.delta}, {"indices", r.indices}};
}

Json to_json(const NearestResult& r) {
  return {{"radius", r.radius}, {"delta", r.delta}, {"indices", r.indices}};
}

Json to_json(const MetricValue& m) {
  return {{"value", m.value}, {"witness", {m.witness[0], m.witness[1]}}};
}

Json to_json(const ProfileRow& row) {
  Json j = {{"delta", row.delta}, {"radius", row.radius}, {"q_diam", row.q_diam},
            {"h_to_limit", row.h_to_limit}, {"d_antipodal", row.d_antipodal}};
  j["gd_gap"] = row.gd_gap ? Json(*row.gd_gap) : Json(nullptr);
  return j;
}

Json to_json(const DecayProfile& profile) {
  Json rows = Json::array();
  for (const auto& r : profile.rows) rows.push_back(to_json(r));
  Json j = {{"kind", to_string(profile.kind)}, {"norm", to_json(profile.norm)},
            {"resolution", profile.resolution}, {"anchor", profile.anchor}, {"rows", rows}};
  if (profile.anchor2) j["anchor2"] = *profile.anchor2;
  if (!profile.probes.empty()) j["probes"] = profile.probes;
  return j;
}

Json to_json(const Verdict& verdict) {
  Json evidence = Json::array();
  for (const auto& e : verdict.evidence) {
    evidence.push_back({{"source", e.source}, {"delta", e.delta}, {"value", e.value}, {"threshold", e.threshold}});
  }
  Json j = {{"property", to_string(verdict.kind)}, {"question", verdict.question},
            {"evidence", evidence}, {"disclaimer", verdict.disclaimer}};
  if (verdict.at) j["at"] = *verdict.at;
  return j;
}

Point point_from_json(const Json& j, const std::string& path) { return numbers(j, path); }

void write_csv(std::ostream& os, const PointSet& set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = set[i];
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c > 0) os << ',';
      os << format_double(p[c]);
    }
    os << '\n';
  }
}

void write_csv(std::ostream& os, const DecayProfile& profile) {
  os << kProfileCsvHeader << '\n';
  for (const auto& r : profile.rows) {
    os << format_double(r.delta) << ',' << format_double(r.radius) << ',' << format_double(r.q_diam) << ','
       << format_double(r.h_to_limit) << ',' << format_double(r.d_antipodal) << ',';
    if (r.gd_gap) os << format_double(*r.gd_gap);
    os << '\n';
  }
}

std::string to_csv(const DecayProfile& profile) {
  std::ostringstream os;
  write_csv(os, profile);
  return os.str();
}

}  // namespace remotal
