#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "remotal/norms.hpp"

namespace remotal {

struct AngleGrid {};
struct SeededDirections {
  std::uint64_t seed = 0;
};
using SamplingScheme = std::variant<AngleGrid, SeededDirections>;

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// AngleGrid in R^2, SeededDirections(kDefaultSeed) elsewhere.
SamplingScheme default_scheme(std::size_t dim);

struct Provenance;

struct FreeForm {
  std::string note;
};
struct SphereSample {
  NormSpec norm;
  std::size_t resolution;
  SamplingScheme scheme;
};
struct BallSample {
  NormSpec norm;
  std::size_t resolution;
  SamplingScheme scheme;
  std::size_t rings;
};
struct Derived {
  std::string op;
  std::vector<std::shared_ptr<const Provenance>> parents;
};

struct Provenance {
  std::variant<FreeForm, SphereSample, BallSample, Derived> tag;
};

// A finite, immutable multiset of points in R^dim, stored row-major.
//
// Sphere and ball provenance are checked at construction: sphere points
// have norm 1 within 1e-9, ball points norm at most 1 + 1e-9.
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<double> coords, Provenance provenance = {FreeForm{}});

  static PointSet from_points(std::span<const Point> points, Provenance provenance = {FreeForm{}});

  std::size_t size() const noexcept { return coords_.size() / dim_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> operator[](std::size_t i) const noexcept { return {coords_.data() + i * dim_, dim_}; }
  Point point(std::size_t i) const { return Point(coords_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                                                  coords_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_)); }
  std::span<const double> coords() const noexcept { return coords_; }
  std::vector<Point> to_points() const;

  const Provenance& provenance() const noexcept { return *provenance_; }
  const std::shared_ptr<const Provenance>& provenance_ptr() const noexcept { return provenance_; }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::shared_ptr<const Provenance> provenance_;
};

PointSet sample_sphere(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme);
PointSet sample_sphere(const NormSpec& norm, std::size_t resolution);

// Origin at index 0, then `ball_rings(resolution)` scaled copies of the
// sphere sample at radii j/m, j = 1..m. The last ring is the sphere sample
// itself, starting at index shell_offset().
PointSet sample_ball(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme);
PointSet sample_ball(const NormSpec& norm, std::size_t resolution);

std::size_t ball_rings(std::size_t resolution);
std::size_t shell_offset(const PointSet& ball);

PointSet translate_set(const PointSet& set, std::span<const double> z);
PointSet scale_set(const PointSet& set, double k);
PointSet union_sets(const PointSet& first, const PointSet& second);
// Points at `indices`, in the given order.
PointSet select(const PointSet& set, std::span<const std::size_t> indices);

// Discretization error of a sphere (or ball) sample, measured in its norm.
// AngleGrid: half the largest gap between consecutive grid points.
// SeededDirections: the largest distance from 256 seeded probe directions
// on the sphere to their nearest sample point.
double sampling_floor(const PointSet& sample);

// Estimate for a sphere sample that has not been built yet.
double sampling_floor(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme);

// Index of the sample point nearest to `target` (lowest index on ties).
std::size_t nearest_index(const PointSet& set, std::span<const double> target, const NormSpec& norm);

}  // namespace remotal
