#pragma once

#include <array>
#include <cstddef>

#include "remotal/norms.hpp"
#include "remotal/sets.hpp"

namespace remotal {

// A metric value together with the index pair realizing it: witness[0]
// indexes the first set, witness[1] the second. Re-evaluating
// norm.distance(A[witness[0]], B[witness[1]]) reproduces `value` exactly.
//
// Small inputs (up to 16384 pairs) are scanned exhaustively and ties
// resolve to the lexicographically lowest pair. Larger inputs:
//   - maxima in R^2 come from the convex hulls of A and -B (a norm's
//     maximum over a pair of polygons sits at a pair of vertices); the
//     witness is the lowest attaining hull pair;
//   - other maxima and infimal distances use k-d tree branch and bound,
//     exact up to 2e-12 relative, lowest attaining pair as witness;
//   - the Hausdorff distance is exact.
struct MetricValue {
  double value = 0.0;
  std::array<std::size_t, 2> witness{0, 0};
};

// max over pairs a, a' in A of ||a - a'||; 0 for a singleton.
MetricValue diameter(const PointSet& a, const NormSpec& norm);

// r(A, B) = max over a in A, b in B of ||a - b||.
MetricValue generalized_diameter(const PointSet& a, const PointSet& b, const NormSpec& norm);

// H(A, B) = max(max_a min_b ||a - b||, max_b min_a ||a - b||).
MetricValue hausdorff_distance(const PointSet& a, const PointSet& b, const NormSpec& norm);

// d(A, B) = min over a in A, b in B of ||a - b||.
MetricValue infimal_distance(const PointSet& a, const PointSet& b, const NormSpec& norm);

}  // namespace remotal
