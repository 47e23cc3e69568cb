#include "remotal/setmetrics.hpp"

#include <limits>

#include "spatial_index.hpp"

namespace remotal {

namespace {

// Below this many pairs an exhaustive scan beats building trees.
constexpr std::size_t kBrutePairs = 1 << 14;

void check(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  if (a.dim() != norm.dim()) throw Error(Errc::dimension_mismatch, "first set dimension does not match norm", "A");
  if (b.dim() != norm.dim()) throw Error(Errc::dimension_mismatch, "second set dimension does not match norm", "B");
}

bool small(const PointSet& a, const PointSet& b) {
  return a.size() <= kBrutePairs / b.size();
}

MetricValue brute_max(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  MetricValue m{-1.0, {0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = norm.distance(a[i], b[j]);
      if (d > m.value) m = {d, {i, j}};
    }
  }
  return m;
}

MetricValue brute_min(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  MetricValue m{std::numeric_limits<double>::infinity(), {0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = norm.distance(a[i], b[j]);
      if (d < m.value) m = {d, {i, j}};
    }
  }
  return m;
}

MetricValue brute_directed(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  MetricValue m{-1.0, {0, 0}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = norm.distance(a[i], b[j]);
      if (d < best) {
        best = d;
        best_j = j;
      }
    }
    if (best > m.value) m = {best, {i, best_j}};
  }
  return m;
}

MetricValue from_hit(const detail::PairHit& h) { return {h.value, {h.i, h.j}}; }

}  // namespace

MetricValue generalized_diameter(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  check(a, b, norm);
  if (small(a, b)) return brute_max(a, b, norm);
  if (a.dim() == 2) return from_hit(detail::max_pair_planar(a, b, norm));
  const detail::KdTree ta(a);
  const detail::KdTree tb(b);
  return from_hit(detail::max_pair(a, ta, b, tb, norm));
}

MetricValue diameter(const PointSet& a, const NormSpec& norm) {
  check(a, a, norm);
  if (small(a, a)) return brute_max(a, a, norm);
  if (a.dim() == 2) return from_hit(detail::max_pair_planar(a, a, norm));
  const detail::KdTree ta(a);
  return from_hit(detail::max_pair(a, ta, a, ta, norm));
}

MetricValue infimal_distance(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  check(a, b, norm);
  if (small(a, b)) return brute_min(a, b, norm);
  const detail::KdTree ta(a);
  const detail::KdTree tb(b);
  return from_hit(detail::min_pair(a, ta, b, tb, norm));
}

MetricValue hausdorff_distance(const PointSet& a, const PointSet& b_in, const NormSpec& norm) {
  check(a, b_in, norm);
#ifdef REMOTAL_MUTATE_HAUSDORFF
  // Mutation-testing build only: measures ||a + b|| instead of ||a - b||.
  const PointSet b = scale_set(b_in, -1.0);
#else
  const PointSet& b = b_in;
#endif
  MetricValue forward;
  MetricValue backward;
  if (small(a, b)) {
    forward = brute_directed(a, b, norm);
    backward = brute_directed(b, a, norm);
  } else {
    const detail::KdTree ta(a);
    const detail::KdTree tb(b);
    forward = from_hit(detail::directed_hausdorff(a, b, tb, norm));
    backward = from_hit(detail::directed_hausdorff(b, a, ta, norm));
  }
  if (backward.value > forward.value) return {backward.value, {backward.witness[1], backward.witness[0]}};
  return forward;
}

}  // namespace remotal
