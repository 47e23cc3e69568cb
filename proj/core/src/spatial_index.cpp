#include "spatial_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace remotal::detail {

namespace {

constexpr double kPad = 1e-12;
// Max search prunes node pairs that could beat the running best by at most
// this much (relative). Without it, families of exactly tied pairs (flat
// faces of polyhedral norms) are never pruned and the search goes quadratic.
constexpr double kTieSlack = 2e-12;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

double pad_up(double v) { return v * (1.0 + kPad) + std::numeric_limits<double>::min(); }
double pad_down(double v) { return v * (1.0 - kPad); }

// Box of differences {a - b : a in A, b in B}.
struct DiffBox {
  explicit DiffBox(std::size_t dim) : lo(dim), hi(dim) {}
  void boxes(const KdTree& ta, std::size_t na, const KdTree& tb, std::size_t nb) {
    const auto alo = ta.lo(na), ahi = ta.hi(na), blo = tb.lo(nb), bhi = tb.hi(nb);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = alo[i] - bhi[i];
      hi[i] = ahi[i] - blo[i];
    }
  }
  void point_box(std::span<const double> x, const KdTree& t, std::size_t n) {
    const auto blo = t.lo(n), bhi = t.hi(n);
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = x[i] - bhi[i];
      hi[i] = x[i] - blo[i];
    }
  }
  std::vector<double> lo;
  std::vector<double> hi;
};

class MaxSearch {
 public:
  MaxSearch(const KdTree& ta, const KdTree& tb, const NormSpec& norm)
      : ta_(ta), tb_(tb), norm_(norm), box_(ta.dim()) {}

  double run() {
    visit(0, 0);
    return best_;
  }

 private:
  double upper(std::size_t na, std::size_t nb) {
    box_.boxes(ta_, na, tb_, nb);
    return pad_up(norm_.box_upper(box_.lo, box_.hi));
  }

  void visit(std::size_t na, std::size_t nb) {
    if (upper(na, nb) <= best_ * (1.0 + kTieSlack)) return;
    const bool la = ta_.leaf(na), lb = tb_.leaf(nb);
    if (la && lb) {
      const auto& a = ta_.node(na);
      const auto& b = tb_.node(nb);
      for (std::size_t p = a.begin; p < a.end; ++p) {
        for (std::size_t q = b.begin; q < b.end; ++q) {
          const double d = norm_.distance(ta_.coord(p), tb_.coord(q));
          if (d > best_) best_ = d;
        }
      }
      return;
    }
    const bool split_a = !la && (lb || ta_.node(na).end - ta_.node(na).begin >= tb_.node(nb).end - tb_.node(nb).begin);
    std::size_t c1, c2;
    double u1, u2;
    if (split_a) {
      c1 = static_cast<std::size_t>(ta_.node(na).left);
      c2 = static_cast<std::size_t>(ta_.node(na).right);
      u1 = upper(c1, nb);
      u2 = upper(c2, nb);
      if (u2 > u1) std::swap(c1, c2);
      visit(c1, nb);
      visit(c2, nb);
    } else {
      c1 = static_cast<std::size_t>(tb_.node(nb).left);
      c2 = static_cast<std::size_t>(tb_.node(nb).right);
      u1 = upper(na, c1);
      u2 = upper(na, c2);
      if (u2 > u1) std::swap(c1, c2);
      visit(na, c1);
      visit(na, c2);
    }
  }

  const KdTree& ta_;
  const KdTree& tb_;
  const NormSpec& norm_;
  DiffBox box_;
  double best_ = -1.0;
};

class MinSearch {
 public:
  MinSearch(const KdTree& ta, const KdTree& tb, const NormSpec& norm)
      : ta_(ta), tb_(tb), norm_(norm), box_(ta.dim()) {}

  double run() {
    visit(0, 0);
    return best_;
  }

 private:
  double lower(std::size_t na, std::size_t nb) {
    box_.boxes(ta_, na, tb_, nb);
    return pad_down(norm_.box_lower(box_.lo, box_.hi));
  }

  void visit(std::size_t na, std::size_t nb) {
    if (best_ == 0.0 || lower(na, nb) >= best_ * (1.0 - kTieSlack)) return;
    const bool la = ta_.leaf(na), lb = tb_.leaf(nb);
    if (la && lb) {
      const auto& a = ta_.node(na);
      const auto& b = tb_.node(nb);
      for (std::size_t p = a.begin; p < a.end; ++p) {
        for (std::size_t q = b.begin; q < b.end; ++q) {
          const double d = norm_.distance(ta_.coord(p), tb_.coord(q));
          if (d < best_) best_ = d;
        }
      }
      return;
    }
    const bool split_a = !la && (lb || ta_.node(na).end - ta_.node(na).begin >= tb_.node(nb).end - tb_.node(nb).begin);
    std::size_t c1, c2;
    if (split_a) {
      c1 = static_cast<std::size_t>(ta_.node(na).left);
      c2 = static_cast<std::size_t>(ta_.node(na).right);
      if (lower(c2, nb) < lower(c1, nb)) std::swap(c1, c2);
      visit(c1, nb);
      visit(c2, nb);
    } else {
      c1 = static_cast<std::size_t>(tb_.node(nb).left);
      c2 = static_cast<std::size_t>(tb_.node(nb).right);
      if (lower(na, c2) < lower(na, c1)) std::swap(c1, c2);
      visit(na, c1);
      visit(na, c2);
    }
  }

  const KdTree& ta_;
  const KdTree& tb_;
  const NormSpec& norm_;
  DiffBox box_;
  double best_ = std::numeric_limits<double>::infinity();
};

// Lowest original index j in `tree` with ||x - b_j|| == target exactly.
// `reachable(lower, upper)` decides whether a node can hold such a point.
template <typename Reachable>
std::size_t lowest_hit(const KdTree& tree, std::span<const double> x, const NormSpec& norm, double target,
                       DiffBox& box, Reachable&& reachable) {
  std::size_t found = kNone;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t n = stack.back();
    stack.pop_back();
    const auto& node = tree.node(n);
    if (node.min_id >= found) continue;
    box.point_box(x, tree, n);
    if (!reachable(box)) continue;
    if (tree.leaf(n)) {
      for (std::size_t k = node.begin; k < node.end; ++k) {
        if (tree.id(k) < found && norm.distance(x, tree.coord(k)) == target) found = tree.id(k);
      }
      continue;
    }
    // Visit the child holding the lower ids first.
    const auto left = static_cast<std::size_t>(node.left);
    const auto right = static_cast<std::size_t>(node.right);
    if (tree.node(left).min_id < tree.node(right).min_id) {
      stack.push_back(right);
      stack.push_back(left);
    } else {
      stack.push_back(left);
      stack.push_back(right);
    }
  }
  return found;
}

}  // namespace

KdTree::KdTree(const PointSet& set, std::size_t leaf_size) : dim_(set.dim()), leaf_size_(std::max<std::size_t>(leaf_size, 1)) {
  ids_.resize(set.size());
  std::iota(ids_.begin(), ids_.end(), std::size_t{0});
  nodes_.reserve(2 * set.size() / leaf_size_ + 2);
  build(0, ids_.size(), set);
  coords_.resize(ids_.size() * dim_);
  for (std::size_t k = 0; k < ids_.size(); ++k) {
    const auto p = set[ids_[k]];
    std::copy(p.begin(), p.end(), coords_.begin() + static_cast<std::ptrdiff_t>(k * dim_));
  }
}

std::size_t KdTree::build(std::size_t begin, std::size_t end, const PointSet& set) {
  const std::size_t index = nodes_.size();
  nodes_.push_back({begin, end, -1, -1, 0});
  boxes_.resize(boxes_.size() + 2 * dim_);
  double* lo = boxes_.data() + 2 * index * dim_;
  double* hi = lo + dim_;
  std::fill(lo, lo + dim_, std::numeric_limits<double>::infinity());
  std::fill(hi, hi + dim_, -std::numeric_limits<double>::infinity());
  std::size_t min_id = kNone;
  for (std::size_t k = begin; k < end; ++k) {
    const auto p = set[ids_[k]];
    for (std::size_t i = 0; i < dim_; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
    min_id = std::min(min_id, ids_[k]);
  }
  nodes_[index].min_id = min_id;

  std::size_t axis = 0;
  double extent = -1.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (hi[i] - lo[i] > extent) {
      extent = hi[i] - lo[i];
      axis = i;
    }
  }
  if (end - begin <= leaf_size_ || extent <= 0.0) return index;

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(ids_.begin() + static_cast<std::ptrdiff_t>(begin), ids_.begin() + static_cast<std::ptrdiff_t>(mid),
                   ids_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) { return set[a][axis] < set[b][axis]; });
  const std::size_t left = build(begin, mid, set);
  const std::size_t right = build(mid, end, set);
  nodes_[index].left = static_cast<std::ptrdiff_t>(left);
  nodes_[index].right = static_cast<std::ptrdiff_t>(right);
  return index;
}

PairHit max_pair(const PointSet& a, const KdTree& ta, const PointSet& /*b*/, const KdTree& tb, const NormSpec& norm) {
  const double best = MaxSearch(ta, tb, norm).run();
  DiffBox box(a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = lowest_hit(tb, a[i], norm, best, box, [&](const DiffBox& bx) {
      return pad_up(norm.box_upper(bx.lo, bx.hi)) >= best;
    });
    if (j != kNone) return {best, i, j};
  }
  return {best, 0, 0};  // unreachable: the maximizing pair exists
}

PairHit min_pair(const PointSet& a, const KdTree& ta, const PointSet& /*b*/, const KdTree& tb, const NormSpec& norm) {
  const double best = MinSearch(ta, tb, norm).run();
  DiffBox box(a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = lowest_hit(tb, a[i], norm, best, box, [&](const DiffBox& bx) {
      return pad_down(norm.box_lower(bx.lo, bx.hi)) <= best;
    });
    if (j != kNone) return {best, i, j};
  }
  return {best, 0, 0};
}

namespace {

// Nearest point to x; stops early once the running minimum drops to
// `give_up` or below. Returns the exact nearest (lowest index on ties)
// when it runs to completion.
NearestHit nearest_bounded(const KdTree& tree, std::span<const double> x, const NormSpec& norm, double give_up,
                           DiffBox& box, bool& aborted) {
  double cur = std::numeric_limits<double>::infinity();
  std::size_t cur_j = kNone;
  aborted = false;

  struct Item {
    double bound;
    std::size_t node;
  };
  std::vector<Item> stack{{0.0, 0}};
  while (!stack.empty()) {
    const Item item = stack.back();
    stack.pop_back();
    const auto& node = tree.node(item.node);
    if (item.bound > cur || (item.bound == cur && node.min_id > cur_j)) continue;
    if (tree.leaf(item.node)) {
      for (std::size_t k = node.begin; k < node.end; ++k) {
        const double d = norm.distance(x, tree.coord(k));
        if (d < cur || (d == cur && tree.id(k) < cur_j)) {
          cur = d;
          cur_j = tree.id(k);
        }
      }
      if (cur <= give_up) {
        aborted = true;
        return {cur, cur_j};
      }
      continue;
    }
    const auto left = static_cast<std::size_t>(node.left);
    const auto right = static_cast<std::size_t>(node.right);
    box.point_box(x, tree, left);
    const double bl = pad_down(norm.box_lower(box.lo, box.hi));
    box.point_box(x, tree, right);
    const double br = pad_down(norm.box_lower(box.lo, box.hi));
    // push the farther child first so the nearer one is explored next
    if (bl <= br) {
      stack.push_back({br, right});
      stack.push_back({bl, left});
    } else {
      stack.push_back({bl, left});
      stack.push_back({br, right});
    }
  }
  return {cur, cur_j};
}

}  // namespace

NearestHit nearest(const KdTree& tree, std::span<const double> x, const NormSpec& norm) {
  DiffBox box(tree.dim());
  bool aborted = false;
  return nearest_bounded(tree, x, norm, -1.0, box, aborted);
}

PairHit directed_hausdorff(const PointSet& a, const PointSet& b, const KdTree& tb, const NormSpec& norm) {
  (void)b;
  DiffBox box(a.dim());
  PairHit hit{-1.0, 0, 0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool aborted = false;
    const NearestHit n = nearest_bounded(tb, a[i], norm, hit.value, box, aborted);
    if (!aborted && n.value > hit.value) hit = {n.value, i, n.index};
  }
  return hit;
}

namespace {

struct Vertex {
  double x;
  double y;
  std::size_t id;
};

// Convex hull, counter-clockwise without collinear points, starting at the
// lowest (then leftmost) vertex. Duplicates keep their lowest index.
std::vector<Vertex> hull(std::vector<Vertex> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vertex& a, const Vertex& b) {
    return a.x != b.x ? a.x < b.x : (a.y != b.y ? a.y < b.y : a.id < b.id);
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Vertex& a, const Vertex& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) {
    if (pts.size() == 2 && (pts[1].y < pts[0].y || (pts[1].y == pts[0].y && pts[1].x < pts[0].x))) {
      std::swap(pts[0], pts[1]);
    }
    return pts;
  }
  auto cross = [](const Vertex& o, const Vertex& a, const Vertex& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
  };
  std::vector<Vertex> h(2 * pts.size());
  std::size_t k = 0;
  for (const Vertex& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i > 0; --i) {
    while (k >= lo && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  const auto start = std::min_element(h.begin(), h.end(), [](const Vertex& a, const Vertex& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::rotate(h.begin(), start, h.end());
  return h;
}

std::vector<Vertex> planar(const PointSet& s, double sign) {
  std::vector<Vertex> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = {sign * s[i][0], sign * s[i][1], i};
  return out;
}

// Polar angle order on [0, 2 pi).
bool angle_less(double ux, double uy, double vx, double vy) {
  const int hu = (uy < 0 || (uy == 0 && ux < 0)) ? 1 : 0;
  const int hv = (vy < 0 || (vy == 0 && vx < 0)) ? 1 : 0;
  if (hu != hv) return hu < hv;
  return ux * vy - uy * vx > 0;
}

}  // namespace

PairHit max_pair_planar(const PointSet& a, const PointSet& b, const NormSpec& norm) {
  // A maximizing pair (p, q) has a norming functional f of p - q with p
  // maximizing f over conv A and q minimizing it over conv B, so (p, -q) is
  // a vertex of conv A + conv(-B). Merging the edge sequences of the two
  // hulls by angle visits every such vertex.
  const std::vector<Vertex> ha = hull(planar(a, 1.0));
  const std::vector<Vertex> hb = hull(planar(b, -1.0));
  const std::size_t na = ha.size(), nb = hb.size();
  const std::size_t ea = na >= 2 ? na : 0, eb = nb >= 2 ? nb : 0;
  auto edge = [](const std::vector<Vertex>& h, std::size_t k, double& x, double& y) {
    const Vertex& u = h[k % h.size()];
    const Vertex& v = h[(k + 1) % h.size()];
    x = v.x - u.x;
    y = v.y - u.y;
  };

  PairHit best{-1.0, 0, 0};
  auto consider = [&](std::size_t i, std::size_t j) {
    const std::size_t ia = ha[i % na].id, jb = hb[j % nb].id;
    const double d = norm.distance(a[ia], b[jb]);
    if (d > best.value || (d == best.value && (ia < best.i || (ia == best.i && jb < best.j)))) best = {d, ia, jb};
  };
  std::size_t i = 0, j = 0;
  consider(0, 0);
  while (i < ea || j < eb) {
    if (j >= eb) {
      ++i;
    } else if (i >= ea) {
      ++j;
    } else {
      double ax, ay, bx, by;
      edge(ha, i, ax, ay);
      edge(hb, j, bx, by);
      if (angle_less(ax, ay, bx, by)) {
        ++i;
      } else if (angle_less(bx, by, ax, ay)) {
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    consider(i, j);
  }
  return best;
}

}  // namespace remotal::detail
