#pragma once

// Finite-sample decay profiles of almost-farthest sets on the unit sphere,
// and the verdicts drawn from them.
//
// Every profile is computed on one sphere sample of the given resolution.
// Delta schedules must be strictly decreasing and stay at or above ten
// times the sample's sampling floor; below that, Q_S(x, delta) mostly
// reflects the grid rather than the norm. Verdicts are statements of
// consistency with a rotundity property at the sampled scale, never proofs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "remotal/norms.hpp"
#include "remotal/sets.hpp"

namespace remotal {

inline constexpr double kFloorFactor = 10.0;
inline constexpr const char* kDisclaimer = "finite-sample diagnostic, not a proof";

struct ProfileRow {
  double delta = 0.0;
  double radius = 0.0;
  double q_diam = 0.0;
  double h_to_limit = 0.0;
  double d_antipodal = 0.0;
  std::optional<double> gd_gap;
};

enum class ProfileKind { q_decay, uniform, gd_identity, chebyshev };

const char* to_string(ProfileKind kind);

struct DecayProfile {
  ProfileKind kind;
  NormSpec norm;
  std::size_t resolution;
  Point anchor;
  std::optional<Point> anchor2;
  std::vector<ProfileRow> rows;
  // Probe points of a uniform profile.
  std::vector<Point> probes;
  // Q (or P) index sets into the sphere sample per row, only when requested.
  std::vector<std::vector<std::size_t>> index_sets;
};

struct ProfileOptions {
  std::optional<SamplingScheme> scheme;  // default_scheme(dim) when unset
  bool keep_index_sets = false;
};

struct Thresholds {
  double lur_eps = 5e-2;
  double tol = 5e-2;
};

enum class VerdictKind { rotund_consistent, lur_consistent_at, ur_consistent, not_rotund, not_lur, not_ur, inconclusive };

const char* to_string(VerdictKind kind);

struct Evidence {
  std::string source;  // e.g. "q_decay#0"
  double delta;
  double value;
  double threshold;
};

struct Verdict {
  VerdictKind kind;
  std::string question;  // "rotund", "lur" or "ur"
  std::optional<Point> at;
  std::vector<Evidence> evidence;
  std::string disclaimer = kDisclaimer;
};

// delta_k = scale / k for k = 1..n_max.
std::vector<double> one_over_n_schedule(std::size_t n_max, double scale = 1.0);

// Throws unless the schedule is non-empty, strictly decreasing, positive,
// and every entry is at least kFloorFactor * floor.
void validate_schedule(std::span<const double> schedule, double floor);

// Per delta: r(S, x), diam Q_S(x, delta), H(Q_S(x, delta), {p}) with p the
// sample point nearest -x/||x||, and d(Q_S(x, delta), Q_S(-x, delta)).
DecayProfile q_decay_profile(const NormSpec& norm, std::span<const double> x, std::span<const double> schedule,
                             std::size_t resolution, const ProfileOptions& options = {});

// `count` distinct sample indices in draw order: SplitMix64(seed).below(size)
// with repeats skipped.
std::vector<std::size_t> draw_probe_indices(std::size_t sample_size, std::size_t count, std::uint64_t seed);

// The probe points uniform_decay_profile would use.
std::vector<Point> draw_probes(const NormSpec& norm, std::size_t count, std::size_t resolution, std::uint64_t seed,
                               const ProfileOptions& options = {});

// Row-wise maxima of q_decay profiles over `probe_count` probes drawn
// (seeded, without replacement) from the sphere sample itself.
DecayProfile uniform_decay_profile(const NormSpec& norm, std::size_t probe_count, std::span<const double> schedule,
                                   std::size_t resolution, std::uint64_t seed, const ProfileOptions& options = {});

// Same, over explicit nonzero probes.
DecayProfile uniform_decay_profile(const NormSpec& norm, std::span<const Point> probes,
                                   std::span<const double> schedule, std::size_t resolution,
                                   const ProfileOptions& options = {});

// q_decay columns for x1 plus gd_gap = r(Q_S(x1, d), Q_S(x2, d)) - ||x1^ - x2^||.
DecayProfile gd_identity_profile(const NormSpec& norm, std::span<const double> x1, std::span<const double> x2,
                                 std::span<const double> schedule, std::size_t resolution,
                                 const ProfileOptions& options = {});

// Mirror of q_decay_profile on nearly best approximants P_S(x, delta); the
// limit point is the sample point nearest x/||x||.
DecayProfile chebyshev_profile(const NormSpec& norm, std::span<const double> x, std::span<const double> schedule,
                               std::size_t resolution, const ProfileOptions& options = {});

// Q_S(x, delta0) at delta0 = sampling floor. rotund_consistent when its
// diameter and its Hausdorff distance to the snapped -x/||x|| are <= tol,
// not_rotund when the diameter exceeds 10 * tol, inconclusive otherwise.
Verdict unique_remotality_check(const NormSpec& norm, std::span<const double> x, std::size_t resolution, double tol,
                                const ProfileOptions& options = {});

struct GdBoundReport {
  double lhs;  // r(Q_S(x, d), Q_S(x', d))
  double rhs;  // r(Q_S(x^, l d), Q_S(x'^, l d))
  double l;    // max(1, 1/||x||, 1/||x'||)
  bool holds;  // lhs <= rhs + 1e-9
};

GdBoundReport gd_normalization_bound_check(const NormSpec& norm, std::span<const double> x,
                                           std::span<const double> x2, double delta, std::size_t resolution,
                                           const ProfileOptions& options = {});

struct BallSphereReport {
  double sphere_radius;
  double ball_radius;
  std::size_t ball_hits;
  double worst_shell_deviation;  // max | ||y|| - 1 | over ball Q indices
  bool hits_on_shell;            // every ball Q index lies in the shell block
};

// Q at delta = 0 on a ball sample versus its sphere subsample.
BallSphereReport ball_sphere_check(const NormSpec& norm, std::span<const double> x, std::size_t resolution,
                                   const ProfileOptions& options = {});

// Verdicts from a set of profiles sharing one norm:
//   rotund  from the smallest-delta row of every q_decay profile,
//   lur     one per q_decay profile, at its anchor,
//   ur      one per uniform profile.
// "Consistent" needs the final q_diam at or below the threshold; "Not"
// needs it above 10x the threshold.
std::vector<Verdict> classify(std::span<const DecayProfile> profiles, const Thresholds& thresholds = {});

}  // namespace remotal
