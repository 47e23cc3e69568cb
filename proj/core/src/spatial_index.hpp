#pragma once

// Branch-and-bound kernels over a k-d tree. Bounds over boxes are padded
// outward by a relative 1e-12; max and min pair searches may additionally
// skip pairs that improve on the running best by at most 2e-12 relative, so
// their value is within that of the exhaustive scan. Values are always
// recomputed from points and the reported witness attains the value exactly.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "remotal/norms.hpp"
#include "remotal/sets.hpp"

namespace remotal::detail {

class KdTree {
 public:
  explicit KdTree(const PointSet& set, std::size_t leaf_size = 16);

  struct Node {
    std::size_t begin;
    std::size_t end;
    std::ptrdiff_t left;   // -1 for leaves
    std::ptrdiff_t right;
    std::size_t min_id;
  };

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return ids_.size(); }
  const Node& node(std::size_t n) const noexcept { return nodes_[n]; }
  bool leaf(std::size_t n) const noexcept { return nodes_[n].left < 0; }
  std::span<const double> lo(std::size_t n) const noexcept { return {boxes_.data() + 2 * n * dim_, dim_}; }
  std::span<const double> hi(std::size_t n) const noexcept { return {boxes_.data() + (2 * n + 1) * dim_, dim_}; }
  // Position `k` in tree order: coordinates and the original index.
  std::span<const double> coord(std::size_t k) const noexcept { return {coords_.data() + k * dim_, dim_}; }
  std::size_t id(std::size_t k) const noexcept { return ids_[k]; }

 private:
  std::size_t build(std::size_t begin, std::size_t end, const PointSet& set);

  std::size_t dim_;
  std::size_t leaf_size_;
  std::vector<std::size_t> ids_;
  std::vector<double> coords_;
  std::vector<Node> nodes_;
  std::vector<double> boxes_;
};

struct PairHit {
  double value = 0.0;
  std::size_t i = 0;  // index into the first set
  std::size_t j = 0;  // index into the second set
};

// max ||a_i - b_j||, witness = lexicographically lowest (i, j) attaining it.
PairHit max_pair(const PointSet& a, const KdTree& ta, const PointSet& b, const KdTree& tb, const NormSpec& norm);
// max ||a_i - b_j|| in R^2 through the hulls of A and -B, O(n log n) for
// any norm. Witness: the lowest attaining pair among hull candidates.
PairHit max_pair_planar(const PointSet& a, const PointSet& b, const NormSpec& norm);
// min ||a_i - b_j||, same witness rule as max_pair.
PairHit min_pair(const PointSet& a, const KdTree& ta, const PointSet& b, const KdTree& tb, const NormSpec& norm);
// max_i min_j ||a_i - b_j||; witness is the lowest i attaining the max and
// the lowest j nearest to it.
PairHit directed_hausdorff(const PointSet& a, const PointSet& b, const KdTree& tb, const NormSpec& norm);

struct NearestHit {
  double value;
  std::size_t index;
};
NearestHit nearest(const KdTree& tree, std::span<const double> x, const NormSpec& norm);

}  // namespace remotal::detail
