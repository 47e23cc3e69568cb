#include "remotal/sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "remotal/rng.hpp"
#include "spatial_index.hpp"

namespace remotal {

namespace {

constexpr double kShellTol = 1e-9;
constexpr std::size_t kFloorProbes = 256;
constexpr std::uint64_t kFloorStream = 0xF1005EEDULL;

void check_dim(std::size_t expected, std::size_t actual, const char* field) {
  if (expected != actual) throw Error(Errc::dimension_mismatch, "dimension mismatch", field);
}

Provenance derived(std::string op, std::vector<std::shared_ptr<const Provenance>> parents) {
  return Provenance{Derived{std::move(op), std::move(parents)}};
}

// Raw unit-circle direction for grid index k. Antipodal and quarter-turn
// symmetries are applied exactly, so p[k + M/2] == -p[k] bit-for-bit when M
// is even and the axis points are exact when 4 divides M.
std::pair<double, double> grid_direction(std::size_t k, std::size_t m) {
  if (m % 2 == 0 && k >= m / 2) {
    auto [c, s] = grid_direction(k - m / 2, m);
    return {-c, -s};
  }
  if (m % 4 == 0 && k >= m / 4) {
    auto [c, s] = grid_direction(k - m / 4, m);
    return {-s, c};
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<double> raw_directions(std::size_t dim, std::size_t count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> out;
  out.reserve(dim * count);
  std::vector<double> u(dim);
  for (std::size_t k = 0; k < count; ++k) {
    while (true) {
      double r2 = 0.0;
      for (double& c : u) {
        c = 2.0 * rng.uniform() - 1.0;
        r2 += c * c;
      }
      if (r2 > 0.0 && r2 <= 1.0) break;
    }
    out.insert(out.end(), u.begin(), u.end());
  }
  return out;
}

void gauge_normalize(const NormSpec& norm, std::vector<double>& coords) {
  const std::size_t dim = norm.dim();
  for (std::size_t k = 0; k < coords.size() / dim; ++k) {
    std::span<double> p(coords.data() + k * dim, dim);
    const double n = norm.eval(p);
    for (double& c : p) c /= n;
  }
}

std::vector<double> sphere_coords(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme) {
  if (resolution < 3) throw Error(Errc::invalid_argument, "resolution must be at least 3", "resolution");
  const std::size_t dim = norm.dim();
  std::vector<double> coords;
  if (std::holds_alternative<AngleGrid>(scheme)) {
    if (dim != 2) throw Error(Errc::dimension_mismatch, "AngleGrid requires dim = 2", "scheme");
    coords.reserve(2 * resolution);
    for (std::size_t k = 0; k < resolution; ++k) {
      auto [c, s] = grid_direction(k, resolution);
      coords.push_back(c);
      coords.push_back(s);
    }
  } else {
    if (dim < 2) throw Error(Errc::dimension_mismatch, "SeededDirections requires dim >= 2", "scheme");
    coords = raw_directions(dim, resolution, std::get<SeededDirections>(scheme).seed);
  }
  gauge_normalize(norm, coords);
  return coords;
}

}  // namespace

SamplingScheme default_scheme(std::size_t dim) {
  if (dim == 2) return AngleGrid{};
  return SeededDirections{kDefaultSeed};
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords, Provenance provenance)
    : dim_(dim), coords_(std::move(coords)), provenance_(std::make_shared<const Provenance>(std::move(provenance))) {
  if (dim_ == 0) throw Error(Errc::invalid_argument, "dimension must be positive", "dim");
  if (coords_.empty()) throw Error(Errc::invalid_argument, "point set must be non-empty", "points");
  if (coords_.size() % dim_ != 0) throw Error(Errc::dimension_mismatch, "coordinate count is not a multiple of dim", "points");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(Errc::invalid_argument, "coordinates must be finite", "points");
  }
  const auto& tag = provenance_->tag;
  if (const auto* s = std::get_if<SphereSample>(&tag)) {
    check_dim(s->norm.dim(), dim_, "points");
    for (std::size_t i = 0; i < size(); ++i) {
      if (std::abs(s->norm.eval((*this)[i]) - 1.0) > kShellTol) {
        throw Error(Errc::invalid_argument, "sphere sample point off the unit sphere", "points");
      }
    }
  } else if (const auto* b = std::get_if<BallSample>(&tag)) {
    check_dim(b->norm.dim(), dim_, "points");
    for (std::size_t i = 0; i < size(); ++i) {
      if (b->norm.eval((*this)[i]) > 1.0 + kShellTol) {
        throw Error(Errc::invalid_argument, "ball sample point outside the unit ball", "points");
      }
    }
  }
}

PointSet PointSet::from_points(std::span<const Point> points, Provenance provenance) {
  if (points.empty()) throw Error(Errc::invalid_argument, "point set must be non-empty", "points");
  const std::size_t dim = points.front().size();
  std::vector<double> coords;
  coords.reserve(dim * points.size());
  for (const Point& p : points) {
    check_dim(dim, p.size(), "points");
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(dim, std::move(coords), std::move(provenance));
}

std::vector<Point> PointSet::to_points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(point(i));
  return out;
}

PointSet sample_sphere(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme) {
  return PointSet(norm.dim(), sphere_coords(norm, resolution, scheme), Provenance{SphereSample{norm, resolution, scheme}});
}

PointSet sample_sphere(const NormSpec& norm, std::size_t resolution) {
  return sample_sphere(norm, resolution, default_scheme(norm.dim()));
}

std::size_t ball_rings(std::size_t resolution) {
  const auto m = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(resolution)) / 2.0));
  return std::max<std::size_t>(m, 1);
}

PointSet sample_ball(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme) {
  const std::vector<double> sphere = sphere_coords(norm, resolution, scheme);
  const std::size_t rings = ball_rings(resolution);
  std::vector<double> coords(norm.dim(), 0.0);
  coords.reserve(norm.dim() + rings * sphere.size());
  for (std::size_t j = 1; j <= rings; ++j) {
    const double radius = static_cast<double>(j) / static_cast<double>(rings);
    for (double c : sphere) coords.push_back(radius * c);
  }
  return PointSet(norm.dim(), std::move(coords), Provenance{BallSample{norm, resolution, scheme, rings}});
}

PointSet sample_ball(const NormSpec& norm, std::size_t resolution) {
  return sample_ball(norm, resolution, default_scheme(norm.dim()));
}

std::size_t shell_offset(const PointSet& ball) {
  const auto* b = std::get_if<BallSample>(&ball.provenance().tag);
  if (b == nullptr) throw Error(Errc::invalid_argument, "not a ball sample", "set");
  return 1 + (b->rings - 1) * b->resolution;
}

PointSet translate_set(const PointSet& set, std::span<const double> z) {
  check_dim(set.dim(), z.size(), "z");
  std::vector<double> coords(set.coords().begin(), set.coords().end());
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += z[k % set.dim()];
  return PointSet(set.dim(), std::move(coords), derived("translate", {set.provenance_ptr()}));
}

PointSet scale_set(const PointSet& set, double k) {
  if (k == 0.0 || !std::isfinite(k)) throw Error(Errc::invalid_argument, "scale factor must be nonzero and finite", "k");
  std::vector<double> coords(set.coords().begin(), set.coords().end());
  for (double& c : coords) c *= k;
  return PointSet(set.dim(), std::move(coords), derived("scale", {set.provenance_ptr()}));
}

PointSet union_sets(const PointSet& first, const PointSet& second) {
  check_dim(first.dim(), second.dim(), "second");
  std::vector<double> coords(first.coords().begin(), first.coords().end());
  coords.insert(coords.end(), second.coords().begin(), second.coords().end());
  return PointSet(first.dim(), std::move(coords), derived("union", {first.provenance_ptr(), second.provenance_ptr()}));
}

PointSet select(const PointSet& set, std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(Errc::invalid_argument, "selection must be non-empty", "indices");
  std::vector<double> coords;
  coords.reserve(indices.size() * set.dim());
  for (std::size_t i : indices) {
    if (i >= set.size()) throw Error(Errc::invalid_argument, "index out of range", "indices");
    const auto p = set[i];
    coords.insert(coords.end(), p.begin(), p.end());
  }
  return PointSet(set.dim(), std::move(coords), derived("select", {set.provenance_ptr()}));
}

namespace {

double grid_floor(const NormSpec& norm, std::span<const double> coords, std::size_t count) {
  double gap = 0.0;
  const std::size_t dim = norm.dim();
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t next = (k + 1) % count;
    gap = std::max(gap, norm.distance(coords.subspan(k * dim, dim), coords.subspan(next * dim, dim)));
  }
  return gap / 2.0;
}

double probe_floor(const NormSpec& norm, const PointSet& sphere, std::uint64_t seed) {
  const detail::KdTree tree(sphere);
  std::vector<double> probes = raw_directions(norm.dim(), kFloorProbes, derive_seed(seed, kFloorStream));
  gauge_normalize(norm, probes);
  double worst = 0.0;
  for (std::size_t k = 0; k < kFloorProbes; ++k) {
    const std::span<const double> p(probes.data() + k * norm.dim(), norm.dim());
    worst = std::max(worst, detail::nearest(tree, p, norm).value);
  }
  return worst;
}

}  // namespace

double sampling_floor(const PointSet& sample) {
  const auto& tag = sample.provenance().tag;
  const NormSpec* norm = nullptr;
  const SamplingScheme* scheme = nullptr;
  std::size_t resolution = 0;
  std::size_t offset = 0;
  if (const auto* s = std::get_if<SphereSample>(&tag)) {
    norm = &s->norm;
    scheme = &s->scheme;
    resolution = s->resolution;
  } else if (const auto* b = std::get_if<BallSample>(&tag)) {
    norm = &b->norm;
    scheme = &b->scheme;
    resolution = b->resolution;
    offset = shell_offset(sample);
  } else {
    throw Error(Errc::invalid_argument, "sampling floor needs a sphere or ball sample", "set");
  }
  const auto shell = sample.coords().subspan(offset * sample.dim(), resolution * sample.dim());
  if (std::holds_alternative<AngleGrid>(*scheme)) return grid_floor(*norm, shell, resolution);
  const PointSet sphere(sample.dim(), std::vector<double>(shell.begin(), shell.end()));
  return probe_floor(*norm, sphere, std::get<SeededDirections>(*scheme).seed);
}

double sampling_floor(const NormSpec& norm, std::size_t resolution, const SamplingScheme& scheme) {
  if (std::holds_alternative<AngleGrid>(scheme)) {
    const std::vector<double> coords = sphere_coords(norm, resolution, scheme);
    return grid_floor(norm, coords, resolution);
  }
  return sampling_floor(sample_sphere(norm, resolution, scheme));
}

std::size_t nearest_index(const PointSet& set, std::span<const double> target, const NormSpec& norm) {
  check_dim(set.dim(), target.size(), "target");
  std::size_t best_i = 0;
  double best = norm.distance(set[0], target);
  for (std::size_t i = 1; i < set.size(); ++i) {
    const double d = norm.distance(set[i], target);
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  return best_i;
}

}  // namespace remotal
