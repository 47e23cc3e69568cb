#pragma once

// JSON and CSV encodings of the toolkit's data types.
//
//   NormSpec        {"kind":"lp","p":2.0,"dim":2}
//                   {"kind":"wlp","p":1.0,"weights":[...]}
//                   {"kind":"poly","vertices":[[...],...]}
//                   "p":"inf" encodes p = infinity
//   PointSet        {"dim":2,"points":[[..],..],"provenance":{...}}; CSV one point per row
//   FarthestResult  {"radius":r,"delta":d,"indices":[...]}
//   MetricValue     {"value":v,"witness":[i,j]}
//   DecayProfile    CSV header delta,radius,q_diam,h_to_limit,d_antipodal,gd_gap
//
// Floating-point values in CSV are printed with 17 significant digits so
// they round-trip exactly.

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "remotal/diagnostics.hpp"
#include "remotal/farthest.hpp"
#include "remotal/norms.hpp"
#include "remotal/sets.hpp"
#include "remotal/setmetrics.hpp"

namespace remotal {

using Json = nlohmann::json;

Json to_json(const NormSpec& norm);
// Errors name the offending field relative to `path` (e.g. "norm.p").
NormSpec norm_from_json(const Json& j, const std::string& path = "norm");

Json to_json(const SamplingScheme& scheme);
SamplingScheme scheme_from_json(const Json& j, const std::string& path = "scheme");

Json to_json(const Provenance& provenance);
Json to_json(const PointSet& set);
PointSet point_set_from_json(const Json& j, const std::string& path = "set");

Json to_json(const FarthestResult& r);
Json to_json(const NearestResult& r);
Json to_json(const MetricValue& m);
Json to_json(const ProfileRow& row);
Json to_json(const DecayProfile& profile);
Json to_json(const Verdict& verdict);

Point point_from_json(const Json& j, const std::string& path);

// "%.17g"
std::string format_double(double v);

void write_csv(std::ostream& os, const PointSet& set);
void write_csv(std::ostream& os, const DecayProfile& profile);
std::string to_csv(const DecayProfile& profile);

inline constexpr const char* kProfileCsvHeader = "delta,radius,q_diam,h_to_limit,d_antipodal,gd_gap";

}  // namespace remotal
