#include "remotal/propcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "remotal/farthest.hpp"
#include "remotal/parallel.hpp"
#include "remotal/rng.hpp"
#include "remotal/serialize.hpp"
#include "remotal/sets.hpp"
#include "remotal/setmetrics.hpp"

namespace remotal {

namespace {

using Index = std::vector<std::size_t>;

// A palette norm with a sphere sample that is exactly symmetric (s and -s
// are both present bit for bit) and a ball built from it: the origin, then
// rings j/m * S for j = 1..m, the last ring being S itself.
struct Shape {
  NormSpec norm;
  PointSet sphere;
  PointSet ball;
  std::size_t shell = 0;
};

constexpr std::size_t kRings = 4;

Shape make_shape(const NormSpec& norm) {
  PointSet s = norm.dim() == 2 ? sample_sphere(norm, 64, AngleGrid{})
                               : sample_sphere(norm, 150, SeededDirections{kDefaultSeed});
  if (norm.dim() != 2) s = union_sets(s, scale_set(s, -1.0));

  std::vector<double> coords(norm.dim(), 0.0);
  for (std::size_t j = 1; j <= kRings; ++j) {
    const double f = static_cast<double>(j) / static_cast<double>(kRings);
    for (double c : s.coords()) coords.push_back(j == kRings ? c : f * c);
  }
  PointSet ball(norm.dim(), std::move(coords), Provenance{FreeForm{"symmetric ball sample"}});
  const std::size_t shell = 1 + (kRings - 1) * s.size();
  return {norm, std::move(s), std::move(ball), shell};
}

const std::vector<Shape>& shapes() {
  static const std::vector<Shape> all = [] {
    std::vector<Shape> out;
    for (const NormSpec& n : property_palette()) out.push_back(make_shape(n));
    return out;
  }();
  return all;
}

Point random_point(SplitMix64& g, std::size_t dim, double half_width) {
  Point p(dim);
  for (double& c : p) c = g.uniform(-half_width, half_width);
  return p;
}

PointSet random_set(SplitMix64& g, std::size_t dim, std::size_t lo, std::size_t hi, double half_width) {
  const std::size_t n = lo + g.below(hi - lo + 1);
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = g.uniform(-half_width, half_width);
  return PointSet(dim, std::move(coords));
}

PointSet repeated(std::span<const double> p, std::size_t copies) {
  std::vector<double> coords;
  for (std::size_t k = 0; k < copies; ++k) coords.insert(coords.end(), p.begin(), p.end());
  return PointSet(p.size(), std::move(coords));
}

Point scaled(std::span<const double> x, double k) {
  Point out(x.begin(), x.end());
  for (double& c : out) c *= k;
  return out;
}

Point shifted(std::span<const double> x, std::span<const double> z) {
  Point out(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += z[i];
  return out;
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

Json points_json(const PointSet& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.point(i));
  return out;
}

// Members of `sub` missing from `super` (both ascending) that `excused`
// does not account for.
Index unexcused(const Index& sub, const Index& super, const std::function<bool(std::size_t)>& excused) {
  Index missing;
  std::set_difference(sub.begin(), sub.end(), super.begin(), super.end(), std::back_inserter(missing));
  Index out;
  for (std::size_t i : missing) {
    if (!excused(i)) out.push_back(i);
  }
  return out;
}

// Excuse for y_i missing from Q_G(w, eta): it sits within tol below the threshold.
std::function<bool(std::size_t)> barely_outside_q(const PointSet& g, std::span<const double> w, const NormSpec& norm,
                                                  const FarthestResult& q, double tol) {
  return [&g, w, &norm, &q, tol](std::size_t i) { return norm.distance(w, g[i]) >= q.radius - q.delta - tol; };
}

// Excuse for y_i in Q_G(w, eta) that it barely made it.
std::function<bool(std::size_t)> barely_inside_q(const PointSet& g, std::span<const double> w, const NormSpec& norm,
                                                 const FarthestResult& q, double tol) {
  return [&g, w, &norm, &q, tol](std::size_t i) { return norm.distance(w, g[i]) <= q.radius - q.delta + tol; };
}

class Recorder {
 public:
  void value(const char* clause, bool ok, double lhs, double rhs) {
    if (ok) return;
    failures_.push_back({{"clause", clause}, {"lhs", lhs}, {"rhs", rhs}});
  }

  // sub must be contained in super; `offenders` are the unexcused leftovers.
  void inclusion(const char* clause, const Index& offenders, const Index& sub, const Index& super) {
    if (offenders.empty()) return;
    failures_.push_back({{"clause", clause}, {"lhs", sub}, {"rhs", super}, {"offenders", offenders}});
  }

  void equality(const char* clause, const Index& lhs_extra, const Index& rhs_extra, const Index& lhs, const Index& rhs) {
    if (lhs_extra.empty() && rhs_extra.empty()) return;
    failures_.push_back({{"clause", clause}, {"lhs", lhs}, {"rhs", rhs}, {"lhs_only", lhs_extra}, {"rhs_only", rhs_extra}});
  }

  void flag(const char* clause, bool ok, Json detail) {
    if (ok) return;
    detail["clause"] = clause;
    failures_.push_back(std::move(detail));
  }

  bool ok() const { return failures_.empty(); }
  Json failures() const { return ok() ? Json(nullptr) : failures_; }

 private:
  Json failures_ = Json::array();
};

PropertyCase finish(const char* name, std::uint64_t seed, std::size_t trial, Json instance, const Recorder& rec,
                    const std::function<void(Json&)>& add_sets) {
  PropertyCase c;
  c.name = name;
  c.seed = seed;
  c.trial = trial;
  c.passed = rec.ok();
  if (!c.passed) add_sets(instance);
  c.instance = std::move(instance);
  c.counterexample = rec.failures();
  return c;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// --- Q_F algebra -----------------------------------------------------------

PropertyCase qf_algebra_trial(std::uint64_t seed, std::size_t trial) {
  SplitMix64 g(derive_seed(seed, trial));
  const Shape& shape = shapes()[g.below(shapes().size())];
  const NormSpec& norm = shape.norm;
  const std::size_t dim = norm.dim();

  const Point x = random_point(g, dim, 2.0);
  // Every eighth trial puts F = {x} (as a multiset) for the r = 0 clause.
  const PointSet f = trial % 8 == 7 ? repeated(x, 1 + g.below(3)) : random_set(g, dim, 5, 50, 2.0);
  Point z = random_point(g, dim, 3.0);
  double alpha = (g.below(2) == 0 ? -1.0 : 1.0) * g.uniform(0.1, 4.0);
  if (trial % 16 == 0) {
    alpha = 1.0;
    std::fill(z.begin(), z.end(), 0.0);
  } else if (trial % 16 == 1) {
    alpha = -2.0;
  }
  const double diam = diameter(f, norm).value;
  double delta = g.uniform(0.0, 2.0 * diam);
  if (trial % 16 == 2) delta = 0.0;
  double delta2 = delta + g.uniform(0.0, diam);

  const double r = farthest_radius(f, x, norm);
  const double scale = 1.0 + std::max({max_abs(f.coords()), max_abs(x), max_abs(z), r}) * std::max(1.0, std::abs(alpha));
  const double tol = kPropertyRelTol * scale;
  Recorder rec;

  // (1) r(F, x) = 0 iff F = {x}
  bool all_x = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!std::equal(f[i].begin(), f[i].end(), x.begin())) all_x = false;
  }
  rec.value("r_zero_iff_singleton", (r == 0.0) == all_x, r, all_x ? 0.0 : 1.0);

  // (2) translation of the radius
  const PointSet zf = translate_set(f, z);
  const Point zx = shifted(x, z);
  const double r_shift = farthest_radius(zf, zx, norm);
  rec.value("radius_translation", close(r_shift, r, tol), r_shift, r);

  // (3) scaling of the radius
  const PointSet af = scale_set(f, alpha);
  const Point ax = scaled(x, alpha);
  const double r_scale = farthest_radius(af, ax, norm);
  rec.value("radius_scaling", close(r_scale, std::abs(alpha) * r, tol), r_scale, std::abs(alpha) * r);

  // (4) monotone in delta, exact
  const FarthestResult q1 = almost_farthest_set(f, x, norm, delta);
  const FarthestResult q2 = almost_farthest_set(f, x, norm, delta2);
  rec.inclusion("q_monotone", unexcused(q1.indices, q2.indices, [](std::size_t) { return false; }), q1.indices,
                q2.indices);

  // (5) Q_{z+F}(z+x, delta) = z + Q_F(x, delta)
  {
    const FarthestResult lhs = almost_farthest_set(zf, zx, norm, delta);
    const FarthestResult& rhs = q1;
    rec.equality("q_translation", unexcused(lhs.indices, rhs.indices, barely_inside_q(zf, zx, norm, lhs, tol)),
                 unexcused(rhs.indices, lhs.indices, barely_inside_q(f, x, norm, rhs, tol)), lhs.indices, rhs.indices);
  }

  // (6) Q_{aF}(a x, delta) = a Q_F(x, delta / |a|)
  {
    const FarthestResult lhs = almost_farthest_set(af, ax, norm, delta);
    const FarthestResult rhs = almost_farthest_set(f, x, norm, delta / std::abs(alpha));
    rec.equality("q_scaling", unexcused(lhs.indices, rhs.indices, barely_inside_q(af, ax, norm, lhs, tol)),
                 unexcused(rhs.indices, lhs.indices, barely_inside_q(f, x, norm, rhs, tol)), lhs.indices, rhs.indices);
  }

  Json instance = {{"norm", to_json(norm)}, {"x", x}, {"z", z}, {"alpha", alpha}, {"delta", delta},
                   {"delta2", delta2}, {"f_size", f.size()}};
  return finish("qf_algebra", seed, trial, std::move(instance), rec, [&](Json& j) { j["F"] = points_json(f); });
}

// --- union lemma -------------------------------------------------------------

PropertyCase union_lemma_trial(std::uint64_t seed, std::size_t trial) {
  SplitMix64 g(derive_seed(seed, trial));
  const Shape& shape = shapes()[g.below(shapes().size())];
  const NormSpec& norm = shape.norm;
  const std::size_t dim = norm.dim();

  const Point x = random_point(g, dim, 2.0);
  const PointSet f1 = random_set(g, dim, 3, 30, 2.0);
  PointSet f2 = trial % 4 == 0 ? translate_set(scale_set(random_set(g, dim, 3, 30, 1.0), 0.1), random_point(g, dim, 0.5))
                               : random_set(g, dim, 3, 30, 2.0);
  const bool equal_case = trial % 2 == 1;
  const double r1 = farthest_radius(f1, x, norm);
  double r2 = farthest_radius(f2, x, norm);
  if (equal_case) {
    // Rescale F2 about x so that both radii agree.
    const double k = r1 / r2;
    f2 = translate_set(scale_set(translate_set(f2, scaled(x, -1.0)), k), x);
    r2 = farthest_radius(f2, x, norm);
  }
  const PointSet u = union_sets(f1, f2);
  const std::size_t n1 = f1.size();
  const double scale = 1.0 + std::max({max_abs(u.coords()), max_abs(x), r1, r2});
  const double tol = kPropertyRelTol * scale;
  Recorder rec;

  Json instance = {{"norm", to_json(norm)}, {"x", x}, {"r1", r1}, {"r2", r2}, {"case", equal_case ? "B" : "A"}};
  auto shift = [n1](Index idx) {
    for (auto& i : idx) i += n1;
    return idx;
  };

  if (!equal_case) {
    const double gap = std::abs(r1 - r2);
    const double delta = trial % 8 == 2 ? 0.0 : g.uniform(0.0, 0.99 * gap);
    instance["delta"] = delta;
    const FarthestResult lhs = almost_farthest_set(u, x, norm, delta);
    Index rhs;
    FarthestResult side;
    if (r1 > r2) {
      side = almost_farthest_set(f1, x, norm, delta);
      rhs = side.indices;
    } else {
      side = almost_farthest_set(f2, x, norm, delta);
      rhs = shift(side.indices);
    }
    rec.equality("union_distinct_radii", unexcused(lhs.indices, rhs, barely_inside_q(u, x, norm, lhs, tol)),
                 unexcused(rhs, lhs.indices, barely_inside_q(u, x, norm, side, tol)), lhs.indices, rhs);
  } else {
    const double eta = trial % 8 == 1 ? 0.0 : g.uniform(0.0, 2.0 * std::max(r1, r2));
    instance["eta"] = eta;
    const FarthestResult lhs = almost_farthest_set(u, x, norm, eta);
    const FarthestResult a = almost_farthest_set(f1, x, norm, eta);
    const FarthestResult b = almost_farthest_set(f2, x, norm, eta);
    Index rhs = a.indices;
    for (std::size_t i : b.indices) rhs.push_back(i + n1);
    // Members of Q_{F1} or Q_{F2} may be excused against their own threshold.
    auto rhs_excused = [&](std::size_t i) {
      return i < n1 ? barely_inside_q(u, x, norm, a, tol)(i) : barely_inside_q(u, x, norm, b, tol)(i);
    };
    rec.equality("union_equal_radii", unexcused(lhs.indices, rhs, barely_inside_q(u, x, norm, lhs, tol)),
                 unexcused(rhs, lhs.indices, rhs_excused), lhs.indices, rhs);
  }

  return finish("union_lemma", seed, trial, std::move(instance), rec, [&](Json& j) {
    j["F1"] = points_json(f1);
    j["F2"] = points_json(f2);
  });
}

// --- nested Q along a ray ----------------------------------------------------

PropertyCase containment_cont_trial(std::uint64_t seed, std::size_t trial) {
  SplitMix64 g(derive_seed(seed, trial));
  const std::size_t which = g.below(shapes().size());
  const Shape& shape = shapes()[which];
  const NormSpec& norm = shape.norm;
  const std::size_t probe = g.below(shape.sphere.size());
  const Point x = shape.sphere.point(probe);
  const double t1 = g.uniform(0.05, 5.0);
  const double t2 = trial % 16 == 0 ? t1 : t1 + (5.0 - t1) * g.uniform();
  const double delta = trial % 16 == 1 ? 0.0 : g.uniform(0.0, 0.5);
  const double tol = kPropertyRelTol * (2.0 + t2);
  const Point x1 = scaled(x, t1);
  const Point x2 = scaled(x, t2);
  Recorder rec;

  auto check = [&](const PointSet& s, const char* outer, const char* inner) {
    const FarthestResult at2 = almost_farthest_set(s, x2, norm, delta);
    const FarthestResult at1 = almost_farthest_set(s, x1, norm, delta);
    const FarthestResult at2_wide = almost_farthest_set(s, x2, norm, t2 / t1 * delta);
    rec.inclusion(outer, unexcused(at2.indices, at1.indices, barely_outside_q(s, x1, norm, at1, tol)), at2.indices,
                  at1.indices);
    rec.inclusion(inner, unexcused(at1.indices, at2_wide.indices, barely_outside_q(s, x2, norm, at2_wide, tol)),
                  at1.indices, at2_wide.indices);
  };
  check(shape.ball, "ball_far_in_near", "ball_near_in_widened_far");
  check(shape.sphere, "sphere_far_in_near", "sphere_near_in_widened_far");

  Json instance = {{"norm", to_json(norm)}, {"palette_index", which}, {"probe_index", probe}, {"x", x},
                   {"t1", t1}, {"t2", t2}, {"delta", delta}};
  return finish("containment_cont", seed, trial, std::move(instance), rec, [](Json&) {});
}

// --- nearly nearest vs almost farthest ---------------------------------------

PropertyCase farclose_trial(std::uint64_t seed, std::size_t trial) {
  SplitMix64 g(derive_seed(seed, trial));
  const std::size_t which = g.below(shapes().size());
  const Shape& shape = shapes()[which];
  const NormSpec& norm = shape.norm;
  const std::size_t dim = norm.dim();
  const Point p = shape.sphere.point(g.below(shape.sphere.size()));
  const double t_ball = g.uniform(1.0, 5.0);
  const double t_sphere = g.uniform(0.05, 5.0);
  const double delta = trial % 16 == 0 ? 0.0 : (trial % 16 == 1 ? 2.0 : g.uniform(0.0, 2.0));
  Point x3 = random_point(g, dim, 3.0);
  if (norm.eval(x3) == 0.0) x3[0] = 1.0;
  Recorder rec;

  auto check = [&](const PointSet& s, const Point& x, const char* clause) {
    const double tol = kPropertyRelTol * (2.0 + norm.eval(x));
    const NearestResult near = nearly_nearest_set(s, x, norm, delta);
    const Point minus_x = scaled(x, -1.0);
    const FarthestResult far = almost_farthest_set(s, minus_x, norm, delta);
    rec.inclusion(clause, unexcused(near.indices, far.indices, barely_outside_q(s, minus_x, norm, far, tol)),
                  near.indices, far.indices);
  };
  const Point x_ball = scaled(p, t_ball);
  const Point x_sphere = scaled(p, t_sphere);
  check(shape.ball, x_ball, "ball_near_in_far");
  check(shape.sphere, x_sphere, "sphere_near_in_far");

  // Q_S(x) and Q_B(x) pick the same shell points.
  {
    const double tol = kPropertyRelTol * (2.0 + norm.eval(x3));
    const FarthestResult qs = almost_farthest_set(shape.sphere, x3, norm, 0.0);
    const FarthestResult qb = almost_farthest_set(shape.ball, x3, norm, 0.0);
    Index mapped = qs.indices;
    for (std::size_t& i : mapped) i += shape.shell;
    rec.equality("sphere_ball_farthest", unexcused(qb.indices, mapped, barely_inside_q(shape.ball, x3, norm, qb, tol)),
                 unexcused(mapped, qb.indices, barely_inside_q(shape.ball, x3, norm, qs, tol)), qb.indices, mapped);
  }

  Json instance = {{"norm", to_json(norm)}, {"palette_index", which}, {"direction", p}, {"t_ball", t_ball},
                   {"t_sphere", t_sphere}, {"x_shell", x3}, {"delta", delta}};
  return finish("farclose", seed, trial, std::move(instance), rec, [](Json&) {});
}

// --- generalized diameter ----------------------------------------------------

// Boundary of conv(A) in R^2 sampled with `per_edge` points per edge,
// hull vertices included.
PointSet hull_boundary(const PointSet& a, std::size_t per_edge) {
  std::vector<std::array<double, 2>> pts;
  for (std::size_t i = 0; i < a.size(); ++i) pts.push_back({a[i][0], a[i][1]});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](const auto& o, const auto& p, const auto& q) {
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0]);
  };
  std::vector<std::array<double, 2>> hull;
  if (pts.size() < 3) {
    hull = pts;
  } else {
    hull.resize(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
      hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lo = k + 1; i > 0; --i) {
      while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
      hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
  }
  std::vector<double> coords;
  for (std::size_t e = 0; e < hull.size(); ++e) {
    const auto& u = hull[e];
    const auto& v = hull[(e + 1) % hull.size()];
    for (std::size_t s = 0; s < per_edge; ++s) {
      const double f = static_cast<double>(s) / static_cast<double>(per_edge);
      coords.push_back(u[0] + f * (v[0] - u[0]));
      coords.push_back(u[1] + f * (v[1] - u[1]));
    }
  }
  return PointSet(2, std::move(coords));
}

PropertyCase gd_axioms_trial(std::uint64_t seed, std::size_t trial) {
  SplitMix64 g(derive_seed(seed, trial));
  const Shape& shape = shapes()[g.below(shapes().size())];
  const NormSpec& norm = shape.norm;
  const std::size_t dim = norm.dim();

  PointSet a = random_set(g, dim, 3, 30, 2.0);
  PointSet b = random_set(g, dim, 3, 30, 2.0);
  const PointSet c = random_set(g, dim, 3, 30, 2.0);
  const Point z = random_point(g, dim, 2.0);
  if (trial % 8 == 0) {
    a = repeated(z, 1 + g.below(3));
    b = repeated(z, 1 + g.below(3));
  } else if (trial % 8 == 1) {
    a = repeated(z, 1);
    b = union_sets(repeated(z, 1), repeated(random_point(g, dim, 2.0), 1));
  }
  const Point x = random_point(g, dim, 3.0);
  const double k = (g.below(2) == 0 ? -1.0 : 1.0) * g.uniform(0.1, 3.0);

  const double scale = 1.0 + std::max({max_abs(a.coords()), max_abs(b.coords()), max_abs(c.coords()), max_abs(x)}) *
                                 std::max(1.0, std::abs(k)) * static_cast<double>(dim);
  const double tol = kPropertyRelTol * scale;
  auto r = [&](const PointSet& p, const PointSet& q) { return generalized_diameter(p, q, norm).value; };
  auto h = [&](const PointSet& p, const PointSet& q) { return hausdorff_distance(p, q, norm).value; };
  auto diam = [&](const PointSet& p) { return diameter(p, norm).value; };
  Recorder rec;

  const double rab = r(a, b);

  // (1) r(A, B) = 0 iff A = B = {z}
  bool single = true;
  for (const PointSet* s : {&a, &b}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      if (!std::equal((*s)[i].begin(), (*s)[i].end(), a[0].begin())) single = false;
    }
  }
  rec.value("gd_zero_iff_singleton", (rab == 0.0) == single, rab, single ? 0.0 : 1.0);

  // (2) translation
  const double r_shift = r(translate_set(a, x), translate_set(b, x));
  rec.value("gd_translation", close(r_shift, rab, tol), r_shift, rab);

  // (3) homogeneity
  const double r_scale = r(scale_set(a, k), scale_set(b, k));
  rec.value("gd_homogeneity", close(r_scale, std::abs(k) * rab, tol), r_scale, std::abs(k) * rab);

  // (4) symmetry
  const double rba = r(b, a);
  rec.value("gd_symmetry", close(rab, rba, tol), rab, rba);

  // (5) triangle inequality
  const double rac = r(a, c);
  const double rcb = r(c, b);
  rec.value("gd_triangle", rab <= rac + rcb + tol, rab, rac + rcb);

  // (6) monotone under A in C
  const PointSet a_in_c = union_sets(a, c);
  const double r_cb = r(a_in_c, b);
  rec.value("gd_monotone", rab <= r_cb + tol, rab, r_cb);

  // (7) closed convex hull, R^2 only
  if (dim == 2) {
    const double r_hull = r(hull_boundary(a, 8), hull_boundary(b, 8));
    rec.value("gd_hull", close(r_hull, rab, kHullTol), r_hull, rab);
  }

  // (8) diam A <= r(A, B') <= diam B' for A in B'
  {
    const PointSet b_wide = union_sets(a, b);
    const double lo = diam(a);
    const double mid = r(a, b_wide);
    const double hi = diam(b_wide);
    rec.value("gd_sandwich_low", lo <= mid + tol, lo, mid);
    rec.value("gd_sandwich_high", mid <= hi + tol, mid, hi);
  }

  // (9) diam(A u B) = max{diam A, diam B, r(A, B)}
  {
    const double lhs = diam(union_sets(a, b));
    const double rhs = std::max({diam(a), diam(b), rab});
    rec.value("gd_union_diameter", close(lhs, rhs, tol), lhs, rhs);
  }

  // Hausdorff distance: pseudometric and d <= H <= r.
  {
    const double haa = h(a, a);
    const double hab = h(a, b);
    const double hba = h(b, a);
    const double hac = h(a, c);
    const double hcb = h(c, b);
    const double h_shift = h(translate_set(a, x), translate_set(b, x));
    const double dab = infimal_distance(a, b, norm).value;
    rec.value("hausdorff_self", haa <= tol, haa, 0.0);
    rec.value("hausdorff_symmetry", close(hab, hba, tol), hab, hba);
    rec.value("hausdorff_triangle", hab <= hac + hcb + tol, hab, hac + hcb);
    rec.value("hausdorff_translation", close(h_shift, hab, tol), h_shift, hab);
    rec.value("infimal_below_hausdorff", dab <= hab + tol, dab, hab);
    rec.value("hausdorff_below_gd", hab <= rab + tol, hab, rab);
  }

  Json instance = {{"norm", to_json(norm)}, {"x", x}, {"k", k}, {"sizes", {a.size(), b.size(), c.size()}}};
  return finish("gd_axioms", seed, trial, std::move(instance), rec, [&](Json& j) {
    j["A"] = points_json(a);
    j["B"] = points_json(b);
    j["C"] = points_json(c);
  });
}

using TrialFn = PropertyCase (*)(std::uint64_t, std::size_t);

const std::map<std::string, TrialFn>& registry() {
  static const std::map<std::string, TrialFn> r = {
      {"qf_algebra", qf_algebra_trial},
      {"union_lemma", union_lemma_trial},
      {"containment_cont", containment_cont_trial},
      {"farclose", farclose_trial},
      {"gd_axioms", gd_axioms_trial},
  };
  return r;
}

std::vector<PropertyCase> run_trials(TrialFn fn, std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw Error(Errc::invalid_argument, "trials must be at least 1", "trials");
  shapes();  // build the samples before fanning out
  std::vector<PropertyCase> out(trials);
  parallel_for(trials, [&](std::size_t t) { out[t] = fn(seed, t); });
  return out;
}

}  // namespace

Json to_json(const PropertyCase& c) {
  return {{"name", c.name}, {"seed", c.seed}, {"trial", c.trial}, {"instance", c.instance},
          {"outcome", c.passed ? "pass" : "fail"}, {"counterexample", c.counterexample}};
}

std::vector<NormSpec> property_palette() {
  return {
      NormSpec::lp(2.0, 2),
      NormSpec::lp(1.0, 2),
      NormSpec::lp(kInfinity, 2),
      NormSpec::weighted_lp(3.0, {1.0, 2.5}),
      NormSpec::polyhedral({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}),
      NormSpec::polyhedral({{1, 0}, {0.5, 1}, {-0.5, 1}, {-1, 0}, {-0.5, -1}, {0.5, -1}}),
      NormSpec::lp(2.0, 3),
      NormSpec::lp(1.0, 3),
      NormSpec::polyhedral({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
                            {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}),
  };
}

std::vector<PropertyCase> check_qf_algebra(std::uint64_t seed, std::size_t trials) {
  return run_trials(qf_algebra_trial, seed, trials);
}

std::vector<PropertyCase> check_union_lemma(std::uint64_t seed, std::size_t trials) {
  return run_trials(union_lemma_trial, seed, trials);
}

std::vector<PropertyCase> check_containment_cont(std::uint64_t seed, std::size_t trials) {
  return run_trials(containment_cont_trial, seed, trials);
}

std::vector<PropertyCase> check_farclose(std::uint64_t seed, std::size_t trials) {
  return run_trials(farclose_trial, seed, trials);
}

std::vector<PropertyCase> check_gd_axioms(std::uint64_t seed, std::size_t trials) {
  return run_trials(gd_axioms_trial, seed, trials);
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {"qf_algebra", "union_lemma", "containment_cont", "farclose",
                                                 "gd_axioms"};
  return names;
}

PropertyCase replay_case(const std::string& name, std::uint64_t seed, std::size_t trial) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(Errc::invalid_argument, "unknown property \"" + name + "\"", "name");
  return it->second(seed, trial);
}

}  // namespace remotal
