#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "remotal/farthest.hpp"

using namespace remotal;

namespace {

PointSet random_set(std::mt19937_64& g, std::size_t n, std::size_t dim) {
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<double> c(n * dim);
  for (auto& v : c) v = u(g);
  return PointSet(dim, std::move(c));
}

std::vector<NormSpec> norms() {
  return {NormSpec::lp(2, 2), NormSpec::lp(1, 2), NormSpec::lp(kInfinity, 2), NormSpec::weighted_lp(3, {1, 2.5}),
          NormSpec::polyhedral({{1, 0}, {0.5, 1}, {-0.5, 1}, {-1, 0}, {-0.5, -1}, {0.5, -1}}), NormSpec::lp(2, 3)};
}

PointSet grid_set(const PointSet& s) {
  std::vector<double> c(s.coords().begin(), s.coords().end());
  for (auto& v : c) v = std::round(v * 8) / 8;
  return PointSet(s.dim(), std::move(c));
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

TEST_CASE("farthest radius examples") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  CHECK(farthest_radius(PointSet::from_points(std::vector<Point>{{0.3, -0.7}}), Point{0.3, -0.7}, l2) == 0.0);
  CHECK(farthest_radius(sample_sphere(NormSpec::lp(1, 2), 400), Point{-1, 0}, NormSpec::lp(1, 2)) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(farthest_radius(PointSet::from_points(std::vector<Point>{{1, 0}, {0, 1}}), Point{0, 0}, l2) == 1.0);
}

TEST_CASE("max norm: delta 0 picks the far edge") {
  const NormSpec linf = NormSpec::lp(kInfinity, 2);
  const PointSet s = sample_sphere(linf, 4000);
  const FarthestResult q = almost_farthest_set(s, Point{1, 0}, linf, 0.0);
  CHECK(q.radius == 2.0);
  std::vector<std::size_t> edge;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::abs(s[i][0] + 1.0) <= 1e-9) edge.push_back(i);
  }
  REQUIRE(edge.size() > 100);
  CHECK(q.indices == edge);
}

TEST_CASE("huge delta keeps everything") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const PointSet s = sample_sphere(l2, 100);
  CHECK(almost_farthest_set(s, Point{0.2, 0.1}, l2, 10.0).indices.size() == 100);
  CHECK(nearly_nearest_set(s, Point{0.2, 0.1}, l2, 10.0).indices.size() == 100);
}

TEST_CASE("euclidean: delta 0 picks only the sample points nearest the antipode") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const Point x{1, 0};
  const PointSet even = sample_sphere(l2, 1000);
  const FarthestResult q = almost_farthest_set(even, x, l2, 0.0);
  REQUIRE(q.indices.size() == 1);
  CHECK(q.indices[0] == nearest_index(even, Point{-1, 0}, l2));

  // odd grid: (-1,0) falls between two mirror-image samples, both kept
  const PointSet odd = sample_sphere(l2, 999);
  const FarthestResult q2 = almost_farthest_set(odd, x, l2, 0.0);
  REQUIRE(q2.indices.size() == 2);
  const double a = oracle::dist(l2, odd.point(q2.indices[0]), {-1, 0});
  const double b = oracle::dist(l2, odd.point(q2.indices[1]), {-1, 0});
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
  CHECK(a < 2 * std::numbers::pi / 999);
}

TEST_CASE("nearly nearest examples") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const PointSet s = sample_sphere(l2, 720);
  const Point p = s.point(37);
  const NearestResult r = nearly_nearest_set(s, Point{2 * p[0], 2 * p[1]}, l2, 0.0);
  CHECK(r.radius == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::find(r.indices.begin(), r.indices.end(), 37) != r.indices.end());

  // arc around (1,0): contiguous in angle, every member within the slack
  const NearestResult arc = nearly_nearest_set(s, Point{0.5, 0}, l2, 0.01);
  REQUIRE(!arc.indices.empty());
  CHECK(std::find(arc.indices.begin(), arc.indices.end(), 0) != arc.indices.end());
  for (std::size_t i : arc.indices) {
    CHECK(s[i][0] > 0.9);
    CHECK(oracle::dist(l2, s.point(i), {0.5, 0}) <= arc.radius + 0.01 + 1e-12);
  }
  std::vector<double> angles;
  for (std::size_t i : arc.indices) angles.push_back(std::atan2(s[i][1], s[i][0]));
  std::sort(angles.begin(), angles.end());
  for (std::size_t k = 1; k < angles.size(); ++k) CHECK(angles[k] - angles[k - 1] <= 2 * std::numbers::pi / 720 + 1e-12);
}

TEST_CASE("result sets agree with the brute-force oracle") {
  std::mt19937_64 g(21);
  std::uniform_real_distribution<double> u(0, 1);
  for (const auto& n : norms()) {
    for (int t = 0; t < 40; ++t) {
      const PointSet f = random_set(g, 5 + t, n.dim());
      const Point x = random_set(g, 1, n.dim()).point(0);
      const double delta = 2 * u(g);
      const auto pts = f.to_points();
      const FarthestResult q = almost_farthest_set(f, x, n, delta);
      CHECK(q.radius == doctest::Approx(oracle::radius(n, pts, x)).epsilon(1e-12));
      CHECK(q.indices == oracle::far_set(n, pts, x, delta));
      const NearestResult p = nearly_nearest_set(f, x, n, delta);
      CHECK(p.radius == doctest::Approx(oracle::nearest(n, pts, x)).epsilon(1e-12));
      CHECK(p.indices == oracle::near_set(n, pts, x, delta));
    }
  }
}

TEST_CASE("threshold semantics and monotonicity") {
  std::mt19937_64 g(22);
  for (const auto& n : norms()) {
    const PointSet f = random_set(g, 300, n.dim());
    const Point x = random_set(g, 1, n.dim()).point(0);
    const FarthestScan scan(f, x, n);
    std::vector<std::size_t> prev;
    for (double delta : {0.0, 0.01, 0.1, 0.5, 1.0, 3.0}) {
      const FarthestResult q = scan.at(delta);
      CHECK(!q.indices.empty());
      CHECK(std::is_sorted(q.indices.begin(), q.indices.end()));
      CHECK(subset(prev, q.indices));
      std::size_t k = 0;
      for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = n.distance(x, f[i]);
        const bool listed = k < q.indices.size() && q.indices[k] == i;
        if (listed) {
          ++k;
          CHECK(d >= q.radius - delta - 1e-12);
        } else {
          CHECK(d < q.radius - delta - 1e-12);
        }
      }
      prev = q.indices;
    }
  }
}

TEST_CASE("translation, scaling and union radius") {
  std::mt19937_64 g(23);
  std::uniform_real_distribution<double> u(0.2, 3);
  for (const auto& n : norms()) {
    for (int t = 0; t < 20; ++t) {
      const PointSet f = random_set(g, 30, n.dim());
      const Point x = random_set(g, 1, n.dim()).point(0);
      const Point z = random_set(g, 1, n.dim()).point(0);
      const double delta = u(g) / 4;
      // eighth-grid coordinates: translation is exact, so index sets must match exactly
      const PointSet fg = grid_set(f), xg = grid_set(PointSet::from_points(std::vector<Point>{x, z}));
      const Point gx = xg.point(0), gz = xg.point(1);
      Point gzx(gx);
      for (std::size_t j = 0; j < gzx.size(); ++j) gzx[j] += gz[j];
      CHECK(almost_farthest_set(translate_set(fg, gz), gzx, n, delta).indices ==
            almost_farthest_set(fg, gx, n, delta).indices);

      const double alpha = (t % 2 ? -1 : 1) * u(g);
      Point ax(x);
      for (auto& c : ax) c *= alpha;
      CHECK(farthest_radius(scale_set(f, alpha), ax, n) ==
            doctest::Approx(std::abs(alpha) * farthest_radius(f, x, n)).epsilon(1e-12));

      const PointSet f2 = random_set(g, 10, n.dim());
      CHECK(farthest_radius(union_sets(f, f2), x, n) ==
            std::max(farthest_radius(f, x, n), farthest_radius(f2, x, n)));
    }
  }
}

TEST_CASE("near set sits inside the far set of the reflected point") {
  for (const auto& n : norms()) {
    const PointSet s = sample_sphere(n, 500);
    std::mt19937_64 g(24);
    for (int t = 0; t < 30; ++t) {
      const std::size_t i = g() % s.size();
      const double scale = 0.3 + 0.1 * t;
      Point x = s.point(i);
      for (auto& c : x) c *= scale;
      Point mx(x);
      for (auto& c : mx) c = -c;
      for (double delta : {0.0, 0.05, 0.5, 2.0}) {
        CHECK(subset(nearly_nearest_set(s, x, n, delta).indices, almost_farthest_set(s, mx, n, delta).indices));
      }
    }
  }
}

TEST_CASE("origin against the sphere keeps the whole sample") {
  for (const auto& n : norms()) {
    const PointSet s = sample_sphere(n, 256);
    const FarthestResult q = almost_farthest_set(s, Point(n.dim(), 0.0), n, 0.0);
    CHECK(q.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(q.indices.size() == s.size());
  }
}

TEST_CASE("maximizing sequences") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const std::vector<double> sched{0.1, 0.01, 0.001, 0.0001};
  const auto seq = maximizing_sequence(l2, Point{1, 0}, sched, 100000);
  REQUIRE(seq.size() == sched.size());
  double prev = 10;
  for (const auto& y : seq) {
    const double gap = oracle::dist(l2, y, {-1, 0});
    CHECK(gap <= prev + 1e-12);
    prev = gap;
  }
  CHECK(prev < 0.03);

  const NormSpec linf = NormSpec::lp(kInfinity, 2);
  const auto edge = maximizing_sequence(linf, Point{1, 0}, sched, 100000);
  for (std::size_t k = 0; k < sched.size(); ++k) CHECK(edge[k][0] <= -1 + sched[k] + 1e-12);

  const std::vector<double> one{0.05};
  const auto single = maximizing_sequence(l2, Point{0, 1}, one, 1000);
  REQUIRE(single.size() == 1);
  CHECK(oracle::dist(l2, single[0], {0, 1}) >= 2 - 0.05 - 1e-12);
}

TEST_CASE("exact polyhedral radius") {
  const NormSpec linf = NormSpec::lp(kInfinity, 2);
  const PointSet sq = PointSet::from_points(std::vector<Point>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  CHECK(polyhedral_farthest_radius(linf, sq, Point{1, 0}) == 2.0);
  for (double t : {0.1, 0.5, 2.0, 7.0}) CHECK(polyhedral_farthest_radius(linf, sq, Point{t, 0}) == 1 + t);
  for (const auto& n : norms()) {
    if (n.dim() != 2) continue;
    CHECK(polyhedral_farthest_radius(n, sq, Point{0, 0}) == doctest::Approx(n.eval(Point{1, 1})).epsilon(1e-15));
  }
  // a sampled polygon boundary never beats the vertex value
  const NormSpec l2 = NormSpec::lp(2, 2);
  const Point x{0.3, -0.2};
  const double exact = polyhedral_farthest_radius(l2, sq, x);
  std::vector<Point> boundary;
  for (int k = 0; k <= 100; ++k) {
    const double s = -1 + 0.02 * k;
    boundary.insert(boundary.end(), {{s, 1}, {s, -1}, {1, s}, {-1, s}});
  }
  CHECK(farthest_radius(PointSet::from_points(boundary), x, l2) <= exact + 1e-12);
}

TEST_CASE("argument errors") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const PointSet s = sample_sphere(l2, 16);
  CHECK_THROWS_AS(almost_farthest_set(s, Point{1, 0}, l2, -0.1), Error);
  CHECK_THROWS_AS(almost_farthest_set(s, Point{1, 0, 0}, l2, 0.1), Error);
  CHECK_THROWS_AS(nearly_nearest_set(s, Point{1, 0}, NormSpec::lp(2, 3), 0.1), Error);
  const std::vector<double> bad{0.1, 0.2};
  CHECK_THROWS_AS(maximizing_sequence(l2, Point{1, 0}, bad, 100), Error);
  CHECK_THROWS_AS(maximizing_sequence(l2, Point{0, 0}, std::vector<double>{0.1}, 100), Error);
}
