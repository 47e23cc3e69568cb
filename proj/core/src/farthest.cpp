#include "remotal/farthest.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace remotal {

namespace {

void check_inputs(const PointSet& set, std::span<const double> x, const NormSpec& norm) {
  if (set.dim() != norm.dim()) throw Error(Errc::dimension_mismatch, "set dimension does not match norm", "set");
  if (x.size() != norm.dim()) throw Error(Errc::dimension_mismatch, "point dimension does not match norm", "x");
}

void check_delta(double delta) {
  if (!(delta >= 0.0)) throw Error(Errc::invalid_argument, "delta must be non-negative", "delta");
}

std::vector<double> all_distances(const PointSet& set, std::span<const double> x, const NormSpec& norm) {
  std::vector<double> d(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) d[i] = norm.distance(x, set[i]);
  return d;
}

}  // namespace

FarthestScan::FarthestScan(const PointSet& set, std::span<const double> x, const NormSpec& norm) {
  check_inputs(set, x, norm);
  distances_ = all_distances(set, x, norm);
  radius_ = *std::max_element(distances_.begin(), distances_.end());
  ranking_.resize(distances_.size());
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
  std::stable_sort(ranking_.begin(), ranking_.end(),
                   [&](std::size_t a, std::size_t b) { return distances_[a] > distances_[b]; });
}

std::size_t FarthestScan::count(double delta) const {
  check_delta(delta);
  const double threshold = radius_ - delta - kThresholdSlack;
  const auto it = std::partition_point(ranking_.begin(), ranking_.end(),
                                       [&](std::size_t i) { return distances_[i] >= threshold; });
  return static_cast<std::size_t>(it - ranking_.begin());
}

FarthestResult FarthestScan::at(double delta) const {
  const std::size_t n = count(delta);
  FarthestResult r;
  r.radius = radius_;
  r.delta = delta;
  r.indices.assign(ranking_.begin(), ranking_.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(r.indices.begin(), r.indices.end());
  r.attained = true;
  return r;
}

NearestScan::NearestScan(const PointSet& set, std::span<const double> x, const NormSpec& norm) {
  check_inputs(set, x, norm);
  distances_ = all_distances(set, x, norm);
  radius_ = *std::min_element(distances_.begin(), distances_.end());
  ranking_.resize(distances_.size());
  std::iota(ranking_.begin(), ranking_.end(), std::size_t{0});
  std::stable_sort(ranking_.begin(), ranking_.end(),
                   [&](std::size_t a, std::size_t b) { return distances_[a] < distances_[b]; });
}

std::size_t NearestScan::count(double delta) const {
  check_delta(delta);
  const double threshold = radius_ + delta + kThresholdSlack;
  const auto it = std::partition_point(ranking_.begin(), ranking_.end(),
                                       [&](std::size_t i) { return distances_[i] <= threshold; });
  return static_cast<std::size_t>(it - ranking_.begin());
}

NearestResult NearestScan::at(double delta) const {
  const std::size_t n = count(delta);
  NearestResult r;
  r.radius = radius_;
  r.delta = delta;
  r.indices.assign(ranking_.begin(), ranking_.begin() + static_cast<std::ptrdiff_t>(n));
  std::sort(r.indices.begin(), r.indices.end());
  return r;
}

double farthest_radius(const PointSet& set, std::span<const double> x, const NormSpec& norm) {
  check_inputs(set, x, norm);
  double r = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) r = std::max(r, norm.distance(x, set[i]));
  return r;
}

FarthestResult almost_farthest_set(const PointSet& set, std::span<const double> x, const NormSpec& norm, double delta) {
  check_delta(delta);
  check_inputs(set, x, norm);
  FarthestResult r;
  r.delta = delta;
  r.radius = farthest_radius(set, x, norm);
  const double threshold = r.radius - delta - kThresholdSlack;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (norm.distance(x, set[i]) >= threshold) r.indices.push_back(i);
  }
  return r;
}

double nearest_radius(const PointSet& set, std::span<const double> x, const NormSpec& norm) {
  check_inputs(set, x, norm);
  double r = kInfinity;
  for (std::size_t i = 0; i < set.size(); ++i) r = std::min(r, norm.distance(x, set[i]));
  return r;
}

NearestResult nearly_nearest_set(const PointSet& set, std::span<const double> x, const NormSpec& norm, double delta) {
  check_delta(delta);
  check_inputs(set, x, norm);
  NearestResult r;
  r.delta = delta;
  r.radius = nearest_radius(set, x, norm);
  const double threshold = r.radius + delta + kThresholdSlack;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (norm.distance(x, set[i]) <= threshold) r.indices.push_back(i);
  }
  return r;
}

std::vector<Point> maximizing_sequence(const NormSpec& norm, std::span<const double> x,
                                       std::span<const double> delta_schedule, std::size_t resolution) {
  if (delta_schedule.empty()) throw Error(Errc::invalid_argument, "schedule must be non-empty", "delta_schedule");
  for (std::size_t k = 0; k < delta_schedule.size(); ++k) {
    if (!(delta_schedule[k] > 0.0)) throw Error(Errc::invalid_argument, "schedule entries must be positive", "delta_schedule");
    if (k > 0 && !(delta_schedule[k] < delta_schedule[k - 1])) {
      throw Error(Errc::invalid_argument, "schedule must be strictly decreasing", "delta_schedule");
    }
  }
  if (norm.eval(x) == 0.0) throw Error(Errc::zero_vector, "x must be nonzero", "x");

  const PointSet sphere = sample_sphere(norm, resolution);
  const FarthestScan scan(sphere, x, norm);
  std::vector<Point> out;
  out.reserve(delta_schedule.size());
  for (double delta : delta_schedule) {
    const FarthestResult q = scan.at(delta);
    out.push_back(sphere.point(q.indices.front()));
  }
  return out;
}

double polyhedral_farthest_radius(const NormSpec& norm, const PointSet& vertices, std::span<const double> x) {
  return farthest_radius(vertices, x, norm);
}

}  // namespace remotal
