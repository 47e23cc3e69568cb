#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "remotal/error.hpp"

namespace remotal {

using Point = std::vector<double>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class NormKind { lp, weighted_lp, polyhedral };

// A norm on R^dim. Three families are supported:
//
//   lp           (sum |x_i|^p)^(1/p), p in [1, inf]; p = inf is max |x_i|
//   weighted_lp  (sum w_i |x_i|^p)^(1/p); for p = inf, max w_i |x_i|
//   polyhedral   Minkowski gauge of conv(vertices) for a centrally
//                symmetric vertex set spanning R^dim
//
// The polyhedral gauge is evaluated from a facet description computed once
// at construction: gauge(x) = max_k |<a_k, x>| where <a_k, v> <= 1 on every
// vertex. Only one normal of each antipodal facet pair is stored, which
// makes gauge(-x) == gauge(x) bit-for-bit.
//
// Instances are immutable after construction and safe to share.
class NormSpec {
 public:
  static NormSpec lp(double p, std::size_t dim);
  static NormSpec weighted_lp(double p, std::vector<double> weights);
  static NormSpec polyhedral(std::vector<Point> vertices);

  NormKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return dim_; }
  double p() const noexcept { return p_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  // Row-major facet normals, facet_count() x dim.
  std::span<const double> facets() const noexcept { return facets_; }
  std::size_t facet_count() const noexcept { return dim_ == 0 ? 0 : facets_.size() / dim_; }

  // True when |x_i| <= |y_i| for all i implies ||x|| <= ||y||.
  bool is_absolute() const noexcept { return kind_ != NormKind::polyhedral; }

  double eval(std::span<const double> x) const;
  // ||a - b|| without materializing the difference.
  double distance(std::span<const double> a, std::span<const double> b) const;

  // Bounds of ||v|| over the axis-aligned box lo <= v <= hi. Both are exact
  // up to rounding; callers needing strict enclosure should pad them.
  double box_upper(std::span<const double> lo, std::span<const double> hi) const;
  double box_lower(std::span<const double> lo, std::span<const double> hi) const;

  std::string describe() const;

  friend bool operator==(const NormSpec& a, const NormSpec& b) {
    return a.kind_ == b.kind_ && a.dim_ == b.dim_ && a.p_ == b.p_ &&
           a.weights_ == b.weights_ && a.vertices_ == b.vertices_;
  }

 private:
  NormSpec() = default;

  template <typename Diff>
  double eval_diff(Diff&& diff) const;

  NormKind kind_ = NormKind::lp;
  std::size_t dim_ = 0;
  double p_ = 2.0;
  std::vector<double> weights_;
  std::vector<double> scale_;  // w_i^(1/p), or w_i when p = inf
  std::vector<Point> vertices_;
  std::vector<double> facets_;
};

double norm_eval(const NormSpec& norm, std::span<const double> x);

// x / ||x||. Throws Errc::zero_vector for x == 0.
Point normalize(const NormSpec& norm, std::span<const double> x);

}  // namespace remotal
