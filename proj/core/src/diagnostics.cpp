#include "remotal/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "remotal/farthest.hpp"
#include "remotal/parallel.hpp"
#include "remotal/rng.hpp"
#include "remotal/setmetrics.hpp"

namespace remotal {

namespace {

constexpr double kGdBoundSlack = 1e-9;
constexpr double kShellTol = 1e-9;

struct Sphere {
  PointSet sample;
  double floor;
};

Sphere make_sphere(const NormSpec& norm, std::size_t resolution, const ProfileOptions& options) {
  PointSet s = sample_sphere(norm, resolution, options.scheme.value_or(default_scheme(norm.dim())));
  const double floor = sampling_floor(s);
  return {std::move(s), floor};
}

void check_probe(const NormSpec& norm, std::span<const double> x, const char* field) {
  if (x.size() != norm.dim()) throw Error(Errc::dimension_mismatch, "probe dimension does not match norm", field);
  if (norm.eval(x) == 0.0) throw Error(Errc::zero_vector, "probe must be nonzero", field);
}

Point negated(std::span<const double> x) {
  Point out(x.begin(), x.end());
  for (double& c : out) c = -c;
  return out;
}

PointSet singleton(const PointSet& s, std::size_t index) {
  const std::size_t one[] = {index};
  return select(s, one);
}

// Columns shared by the Q-based profiles for one anchor.
struct AnchorScans {
  AnchorScans(const PointSet& s, std::span<const double> x, const NormSpec& norm)
      : forward(s, x, norm),
        backward(s, negated(x), norm),
        limit(nearest_index(s, normalize(norm, negated(x)), norm)) {}

  FarthestScan forward;
  FarthestScan backward;
  std::size_t limit;
};

ProfileRow q_row(const PointSet& s, const AnchorScans& scans, const NormSpec& norm, double delta,
                 std::vector<std::size_t>* keep) {
  const FarthestResult q = scans.forward.at(delta);
  const FarthestResult q_neg = scans.backward.at(delta);
  const PointSet qset = select(s, q.indices);
  const PointSet qneg = select(s, q_neg.indices);
  ProfileRow row;
  row.delta = delta;
  row.radius = q.radius;
  row.q_diam = diameter(qset, norm).value;
  row.h_to_limit = hausdorff_distance(qset, singleton(s, scans.limit), norm).value;
  row.d_antipodal = infimal_distance(qset, qneg, norm).value;
  if (keep != nullptr) *keep = q.indices;
  return row;
}

DecayProfile make_profile(ProfileKind kind, const NormSpec& norm, std::size_t resolution, std::span<const double> anchor) {
  return DecayProfile{kind, norm, resolution, Point(anchor.begin(), anchor.end()), std::nullopt, {}, {}, {}};
}

std::vector<ProfileRow> q_rows(const PointSet& s, const AnchorScans& scans, const NormSpec& norm,
                               std::span<const double> schedule, std::vector<std::vector<std::size_t>>* keep) {
  std::vector<ProfileRow> rows(schedule.size());
  if (keep != nullptr) keep->assign(schedule.size(), {});
  parallel_for(schedule.size(), [&](std::size_t k) {
    rows[k] = q_row(s, scans, norm, schedule[k], keep != nullptr ? &(*keep)[k] : nullptr);
  });
  return rows;
}

Evidence last_row_evidence(const std::string& source, const ProfileRow& row, double threshold) {
  return {source, row.delta, row.q_diam, threshold};
}

}  // namespace

const char* to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::q_decay: return "q_decay";
    case ProfileKind::uniform: return "uniform";
    case ProfileKind::gd_identity: return "gd_identity";
    case ProfileKind::chebyshev: return "chebyshev";
  }
  return "unknown";
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::rotund_consistent: return "RotundConsistent";
    case VerdictKind::lur_consistent_at: return "LURConsistentAt";
    case VerdictKind::ur_consistent: return "URConsistent";
    case VerdictKind::not_rotund: return "NotRotund";
    case VerdictKind::not_lur: return "NotLUR";
    case VerdictKind::not_ur: return "NotUR";
    case VerdictKind::inconclusive: return "Inconclusive";
  }
  return "unknown";
}

std::vector<double> one_over_n_schedule(std::size_t n_max, double scale) {
  if (n_max == 0) throw Error(Errc::invalid_argument, "n_max must be positive", "n_max");
  if (!(scale > 0.0)) throw Error(Errc::invalid_argument, "scale must be positive", "scale");
  std::vector<double> out;
  out.reserve(n_max);
  for (std::size_t k = 1; k <= n_max; ++k) out.push_back(scale / static_cast<double>(k));
  return out;
}

void validate_schedule(std::span<const double> schedule, double floor) {
  if (schedule.empty()) throw Error(Errc::invalid_argument, "schedule must be non-empty", "delta_schedule");
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    if (!(schedule[k] > 0.0)) throw Error(Errc::invalid_argument, "schedule entries must be positive", "delta_schedule");
    if (k > 0 && !(schedule[k] < schedule[k - 1])) {
      throw Error(Errc::invalid_argument, "schedule must be strictly decreasing", "delta_schedule");
    }
  }
  if (schedule.back() < kFloorFactor * floor) {
    throw Error(Errc::sampling_floor,
                "smallest delta " + std::to_string(schedule.back()) + " is below 10x the sampling floor " +
                    std::to_string(floor),
                "delta_schedule");
  }
}

DecayProfile q_decay_profile(const NormSpec& norm, std::span<const double> x, std::span<const double> schedule,
                             std::size_t resolution, const ProfileOptions& options) {
  check_probe(norm, x, "x");
  const Sphere sphere = make_sphere(norm, resolution, options);
  validate_schedule(schedule, sphere.floor);
  const AnchorScans scans(sphere.sample, x, norm);
  DecayProfile p = make_profile(ProfileKind::q_decay, norm, resolution, x);
  p.rows = q_rows(sphere.sample, scans, norm, schedule, options.keep_index_sets ? &p.index_sets : nullptr);
  return p;
}

std::vector<std::size_t> draw_probe_indices(std::size_t sample_size, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw Error(Errc::invalid_argument, "probe_count must be positive", "probe_count");
  if (count > sample_size) throw Error(Errc::invalid_argument, "more probes than sample points", "probe_count");
  std::vector<std::size_t> chosen;
  std::set<std::size_t> seen;
  SplitMix64 rng(seed);
  while (chosen.size() < count) {
    const std::size_t i = rng.below(sample_size);
    if (seen.insert(i).second) chosen.push_back(i);
  }
  return chosen;
}

std::vector<Point> draw_probes(const NormSpec& norm, std::size_t count, std::size_t resolution, std::uint64_t seed,
                               const ProfileOptions& options) {
  const Sphere sphere = make_sphere(norm, resolution, options);
  std::vector<Point> out;
  for (std::size_t i : draw_probe_indices(sphere.sample.size(), count, seed)) out.push_back(sphere.sample.point(i));
  return out;
}

namespace {

DecayProfile uniform_over(const NormSpec& norm, const Sphere& sphere, std::span<const Point> probes,
                          std::span<const double> schedule, std::size_t resolution) {
  DecayProfile p = make_profile(ProfileKind::uniform, norm, resolution, probes.front());
  p.rows.assign(schedule.size(), ProfileRow{});
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    p.rows[k].delta = schedule[k];
    p.rows[k].radius = p.rows[k].q_diam = p.rows[k].h_to_limit = p.rows[k].d_antipodal = -kInfinity;
  }
  for (const Point& probe : probes) {
    p.probes.push_back(probe);
    const AnchorScans scans(sphere.sample, probe, norm);
    const std::vector<ProfileRow> rows = q_rows(sphere.sample, scans, norm, schedule, nullptr);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      ProfileRow& r = p.rows[k];
      r.radius = std::max(r.radius, rows[k].radius);
      r.q_diam = std::max(r.q_diam, rows[k].q_diam);
      r.h_to_limit = std::max(r.h_to_limit, rows[k].h_to_limit);
      r.d_antipodal = std::max(r.d_antipodal, rows[k].d_antipodal);
    }
  }
  return p;
}

}  // namespace

DecayProfile uniform_decay_profile(const NormSpec& norm, std::size_t probe_count, std::span<const double> schedule,
                                   std::size_t resolution, std::uint64_t seed, const ProfileOptions& options) {
  const Sphere sphere = make_sphere(norm, resolution, options);
  validate_schedule(schedule, sphere.floor);
  std::vector<Point> probes;
  for (std::size_t i : draw_probe_indices(sphere.sample.size(), probe_count, seed)) {
    probes.push_back(sphere.sample.point(i));
  }
  return uniform_over(norm, sphere, probes, schedule, resolution);
}

DecayProfile uniform_decay_profile(const NormSpec& norm, std::span<const Point> probes,
                                   std::span<const double> schedule, std::size_t resolution,
                                   const ProfileOptions& options) {
  if (probes.empty()) throw Error(Errc::invalid_argument, "at least one probe is required", "probes");
  for (const Point& x : probes) check_probe(norm, x, "probes");
  const Sphere sphere = make_sphere(norm, resolution, options);
  validate_schedule(schedule, sphere.floor);
  return uniform_over(norm, sphere, probes, schedule, resolution);
}

DecayProfile gd_identity_profile(const NormSpec& norm, std::span<const double> x1, std::span<const double> x2,
                                 std::span<const double> schedule, std::size_t resolution,
                                 const ProfileOptions& options) {
  check_probe(norm, x1, "x1");
  check_probe(norm, x2, "x2");
  const Sphere sphere = make_sphere(norm, resolution, options);
  validate_schedule(schedule, sphere.floor);
  const AnchorScans scans(sphere.sample, x1, norm);
  const FarthestScan second(sphere.sample, x2, norm);
  const double anchor_gap = norm.distance(normalize(norm, x1), normalize(norm, x2));

  DecayProfile p = make_profile(ProfileKind::gd_identity, norm, resolution, x1);
  p.anchor2 = Point(x2.begin(), x2.end());
  p.rows = q_rows(sphere.sample, scans, norm, schedule, options.keep_index_sets ? &p.index_sets : nullptr);
  parallel_for(schedule.size(), [&](std::size_t k) {
    const PointSet q1 = select(sphere.sample, scans.forward.at(schedule[k]).indices);
    const PointSet q2 = select(sphere.sample, second.at(schedule[k]).indices);
    p.rows[k].gd_gap = generalized_diameter(q1, q2, norm).value - anchor_gap;
  });
  return p;
}

DecayProfile chebyshev_profile(const NormSpec& norm, std::span<const double> x, std::span<const double> schedule,
                               std::size_t resolution, const ProfileOptions& options) {
  check_probe(norm, x, "x");
  const Sphere sphere = make_sphere(norm, resolution, options);
  validate_schedule(schedule, sphere.floor);
  const PointSet& s = sphere.sample;
  const NearestScan forward(s, x, norm);
  const NearestScan backward(s, negated(x), norm);
  const std::size_t limit = nearest_index(s, normalize(norm, x), norm);

  DecayProfile p = make_profile(ProfileKind::chebyshev, norm, resolution, x);
  p.rows.resize(schedule.size());
  if (options.keep_index_sets) p.index_sets.assign(schedule.size(), {});
  parallel_for(schedule.size(), [&](std::size_t k) {
    const NearestResult near = forward.at(schedule[k]);
    const PointSet pset = select(s, near.indices);
    const PointSet pneg = select(s, backward.at(schedule[k]).indices);
    ProfileRow& row = p.rows[k];
    row.delta = schedule[k];
    row.radius = near.radius;
    row.q_diam = diameter(pset, norm).value;
    row.h_to_limit = hausdorff_distance(pset, singleton(s, limit), norm).value;
    row.d_antipodal = infimal_distance(pset, pneg, norm).value;
    if (options.keep_index_sets) p.index_sets[k] = near.indices;
  });
  return p;
}

Verdict unique_remotality_check(const NormSpec& norm, std::span<const double> x, std::size_t resolution, double tol,
                                const ProfileOptions& options) {
  check_probe(norm, x, "x");
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tol must be positive", "tol");
  const Sphere sphere = make_sphere(norm, resolution, options);
  const AnchorScans scans(sphere.sample, x, norm);
  const double delta0 = sphere.floor;
  const PointSet q = select(sphere.sample, scans.forward.at(delta0).indices);
  const double diam = diameter(q, norm).value;
  const double h = hausdorff_distance(q, singleton(sphere.sample, scans.limit), norm).value;

  Verdict v{VerdictKind::inconclusive, "rotund", Point(x.begin(), x.end()), {}, kDisclaimer};
  v.evidence.push_back({"q_diam", delta0, diam, tol});
  v.evidence.push_back({"h_to_limit", delta0, h, tol});
  if (diam <= tol && h <= tol) {
    v.kind = VerdictKind::rotund_consistent;
  } else if (diam > 10.0 * tol) {
    v.kind = VerdictKind::not_rotund;
  }
  return v;
}

GdBoundReport gd_normalization_bound_check(const NormSpec& norm, std::span<const double> x,
                                           std::span<const double> x2, double delta, std::size_t resolution,
                                           const ProfileOptions& options) {
  check_probe(norm, x, "x");
  check_probe(norm, x2, "x2");
  if (!(delta >= 0.0)) throw Error(Errc::invalid_argument, "delta must be non-negative", "delta");
  const Sphere sphere = make_sphere(norm, resolution, options);
  const PointSet& s = sphere.sample;
  const double l = std::max({1.0, 1.0 / norm.eval(x), 1.0 / norm.eval(x2)});
  const Point xh = normalize(norm, x);
  const Point x2h = normalize(norm, x2);

  auto q = [&](std::span<const double> anchor, double d) {
    return select(s, almost_farthest_set(s, anchor, norm, d).indices);
  };
  GdBoundReport r{};
  r.l = l;
  r.lhs = generalized_diameter(q(x, delta), q(x2, delta), norm).value;
  r.rhs = generalized_diameter(q(xh, l * delta), q(x2h, l * delta), norm).value;
  r.holds = r.lhs <= r.rhs + kGdBoundSlack;
  return r;
}

BallSphereReport ball_sphere_check(const NormSpec& norm, std::span<const double> x, std::size_t resolution,
                                   const ProfileOptions& options) {
  if (x.size() != norm.dim()) throw Error(Errc::dimension_mismatch, "probe dimension does not match norm", "x");
  const SamplingScheme scheme = options.scheme.value_or(default_scheme(norm.dim()));
  const PointSet sphere = sample_sphere(norm, resolution, scheme);
  const PointSet ball = sample_ball(norm, resolution, scheme);
  const FarthestResult qs = almost_farthest_set(sphere, x, norm, 0.0);
  const FarthestResult qb = almost_farthest_set(ball, x, norm, 0.0);
  const std::size_t offset = shell_offset(ball);

  BallSphereReport r{};
  r.sphere_radius = qs.radius;
  r.ball_radius = qb.radius;
  r.ball_hits = qb.indices.size();
  r.hits_on_shell = true;
  r.worst_shell_deviation = 0.0;
  for (std::size_t i : qb.indices) {
    const double dev = std::abs(norm.eval(ball[i]) - 1.0);
    r.worst_shell_deviation = std::max(r.worst_shell_deviation, dev);
    if (i < offset || dev > kShellTol) r.hits_on_shell = false;
  }
  return r;
}

std::vector<Verdict> classify(std::span<const DecayProfile> profiles, const Thresholds& thresholds) {
  if (profiles.empty()) throw Error(Errc::invalid_argument, "no profiles to classify", "profiles");
  for (const DecayProfile& p : profiles) {
    if (!(p.norm == profiles.front().norm)) throw Error(Errc::invalid_argument, "profiles use different norms", "profiles");
    if (p.rows.empty()) throw Error(Errc::invalid_argument, "profile has an empty schedule", "profiles");
  }

  std::vector<Verdict> out;

  // Rotundity, pooled over pointwise profiles.
  {
    Verdict v{VerdictKind::inconclusive, "rotund", std::nullopt, {}, kDisclaimer};
    bool any = false;
    bool all_small = true;
    bool any_large = false;
    for (std::size_t k = 0; k < profiles.size(); ++k) {
      const DecayProfile& p = profiles[k];
      if (p.kind != ProfileKind::q_decay) continue;
      any = true;
      const ProfileRow& last = p.rows.back();
      const std::string source = std::string("q_decay#") + std::to_string(k);
      v.evidence.push_back(last_row_evidence(source, last, thresholds.tol));
      v.evidence.push_back({source + ".h_to_limit", last.delta, last.h_to_limit, thresholds.tol});
      if (last.q_diam > thresholds.tol || last.h_to_limit > thresholds.tol) all_small = false;
      if (last.q_diam > 10.0 * thresholds.tol) any_large = true;
    }
    if (any) {
      if (any_large) {
        v.kind = VerdictKind::not_rotund;
      } else if (all_small) {
        v.kind = VerdictKind::rotund_consistent;
      }
      out.push_back(std::move(v));
    }
  }

  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const DecayProfile& p = profiles[k];
    if (p.kind != ProfileKind::q_decay) continue;
    const ProfileRow& last = p.rows.back();
    Verdict v{VerdictKind::inconclusive, "lur", p.anchor, {}, kDisclaimer};
    v.evidence.push_back(last_row_evidence("q_decay#" + std::to_string(k), last, thresholds.lur_eps));
    if (last.q_diam <= thresholds.lur_eps) {
      v.kind = VerdictKind::lur_consistent_at;
    } else if (last.q_diam > 10.0 * thresholds.lur_eps) {
      v.kind = VerdictKind::not_lur;
    }
    out.push_back(std::move(v));
  }

  for (std::size_t k = 0; k < profiles.size(); ++k) {
    const DecayProfile& p = profiles[k];
    if (p.kind != ProfileKind::uniform) continue;
    const ProfileRow& last = p.rows.back();
    Verdict v{VerdictKind::inconclusive, "ur", std::nullopt, {}, kDisclaimer};
    v.evidence.push_back(last_row_evidence("uniform#" + std::to_string(k), last, thresholds.lur_eps));
    if (last.q_diam <= thresholds.lur_eps) {
      v.kind = VerdictKind::ur_consistent;
    } else if (last.q_diam > 10.0 * thresholds.lur_eps) {
      v.kind = VerdictKind::not_ur;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace remotal
