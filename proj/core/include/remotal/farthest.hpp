#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "remotal/norms.hpp"
#include "remotal/sets.hpp"

namespace remotal {

// Absolute slack on the defining inequalities of Q_F(x, delta) and
// P_A(x, delta): ||x - y|| >= r - delta - kThresholdSlack (resp. <= d +
// delta + kThresholdSlack).
inline constexpr double kThresholdSlack = 1e-12;

struct FarthestResult {
  double radius = 0.0;
  double delta = 0.0;
  std::vector<std::size_t> indices;  // ascending
  bool attained = true;
};

struct NearestResult {
  double radius = 0.0;
  double delta = 0.0;
  std::vector<std::size_t> indices;  // ascending
  bool attained = true;
};

// Distances from a fixed x to every point of F, ranked once so that every
// almost-farthest set is a prefix of the ranking. Answering a whole delta
// schedule costs one scan plus a sort.
class FarthestScan {
 public:
  FarthestScan(const PointSet& set, std::span<const double> x, const NormSpec& norm);

  double radius() const noexcept { return radius_; }
  std::span<const double> distances() const noexcept { return distances_; }
  // Point indices ordered by decreasing distance (lowest index first on ties).
  std::span<const std::size_t> ranking() const noexcept { return ranking_; }

  std::size_t count(double delta) const;
  FarthestResult at(double delta) const;

 private:
  std::vector<double> distances_;
  std::vector<std::size_t> ranking_;
  double radius_ = 0.0;
};

class NearestScan {
 public:
  NearestScan(const PointSet& set, std::span<const double> x, const NormSpec& norm);

  double radius() const noexcept { return radius_; }
  std::span<const double> distances() const noexcept { return distances_; }
  std::span<const std::size_t> ranking() const noexcept { return ranking_; }

  std::size_t count(double delta) const;
  NearestResult at(double delta) const;

 private:
  std::vector<double> distances_;
  std::vector<std::size_t> ranking_;
  double radius_ = 0.0;
};

// r(F, x) = max_{y in F} ||x - y||.
double farthest_radius(const PointSet& set, std::span<const double> x, const NormSpec& norm);

// Q_F(x, delta) = { y in F : ||x - y|| >= r(F, x) - delta }.
FarthestResult almost_farthest_set(const PointSet& set, std::span<const double> x, const NormSpec& norm, double delta);

// d(x, A) = min_{y in A} ||x - y||.
double nearest_radius(const PointSet& set, std::span<const double> x, const NormSpec& norm);

// P_A(x, delta) = { y in A : ||x - y|| <= d(x, A) + delta }.
NearestResult nearly_nearest_set(const PointSet& set, std::span<const double> x, const NormSpec& norm, double delta);

// One point of Q_S(x, delta_k) per schedule entry, taken from a sphere sample
// at `resolution` (lowest qualifying index). The schedule must be strictly
// decreasing and positive.
std::vector<Point> maximizing_sequence(const NormSpec& norm, std::span<const double> x,
                                       std::span<const double> delta_schedule, std::size_t resolution);

// Exact max_v ||x - v|| over polytope vertices. A norm distance is convex, so
// this is also the farthest radius from x of conv(vertices) and of its
// boundary.
double polyhedral_farthest_radius(const NormSpec& norm, const PointSet& vertices, std::span<const double> x);

}  // namespace remotal
