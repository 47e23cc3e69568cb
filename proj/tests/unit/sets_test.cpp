#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "remotal/sets.hpp"

using namespace remotal;

namespace {

bool near(std::span<const double> a, const Point& b, double tol = 1e-12) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

bool contains(const PointSet& s, const Point& p, double tol = 1e-12) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (near(s[i], p, tol)) return true;
  }
  return false;
}

const std::vector<Point> kAxes{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

TEST_CASE("quarter-turn grid gives the axes") {
  for (double p : {2.0, 1.0}) {
    const PointSet s = sample_sphere(NormSpec::lp(p, 2), 4, AngleGrid{});
    REQUIRE(s.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(near(s[i], kAxes[i], 1e-15));
  }
}

TEST_CASE("max-norm grid of 8 reaches the corners") {
  const NormSpec linf = NormSpec::lp(kInfinity, 2);
  const PointSet s = sample_sphere(linf, 8, AngleGrid{});
  CHECK(contains(s, {1, 1}));
  CHECK(contains(s, {1, -1}));
  CHECK(contains(s, {-1, 1}));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(linf.eval(s[i]) - 1.0) <= 1e-12);
}

TEST_CASE("sphere samples lie on the unit sphere for every palette norm") {
  const std::vector<Point> hexagon{{1, 0}, {0.5, 1}, {-0.5, 1}, {-1, 0}, {-0.5, -1}, {0.5, -1}};
  const std::vector<NormSpec> norms{NormSpec::lp(2, 2), NormSpec::lp(1, 2), NormSpec::weighted_lp(3, {1, 2.5}),
                                    NormSpec::polyhedral(hexagon), NormSpec::lp(2, 3), NormSpec::lp(1, 3)};
  for (const auto& n : norms) {
    const PointSet s = sample_sphere(n, 997);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(oracle::norm(n, s.point(i)) - 1.0) <= 1e-9);
  }
}

TEST_CASE("ball samples: origin, containment, corners") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const PointSet tiny = sample_ball(l2, 4);
  CHECK(contains(tiny, {0, 0}, 0.0));

  for (const auto& n : {l2, NormSpec::lp(1, 2), NormSpec::lp(kInfinity, 2), NormSpec::lp(2, 3)}) {
    const PointSet b = sample_ball(n, 400);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(n.eval(b[i]) <= 1 + 1e-9);
  }

  const PointSet box = sample_ball(NormSpec::lp(kInfinity, 2), 4000);
  for (const Point& corner : std::vector<Point>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) CHECK(contains(box, corner, 1e-9));
}

TEST_CASE("ball shell is an exact copy of the sphere sample") {
  const NormSpec n = NormSpec::lp(3, 2);
  const PointSet s = sample_sphere(n, 300);
  const PointSet b = sample_ball(n, 300);
  const std::size_t off = shell_offset(b);
  REQUIRE(b.size() == off + s.size());
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(b.point(off + i) == s.point(i));
}

TEST_CASE("set operations") {
  const PointSet t = translate_set(PointSet::from_points(std::vector<Point>{{1, 0}}), Point{0, 1});
  REQUIRE(t.size() == 1);
  CHECK(t.point(0) == Point{1, 1});

  const PointSet s = scale_set(PointSet::from_points(std::vector<Point>{{1, 0}, {0, 1}}), -2);
  REQUIRE(s.size() == 2);
  CHECK(s.point(0) == Point{-2, 0});
  CHECK(s.point(1) == Point{0, -2});

  const PointSet a = PointSet::from_points(std::vector<Point>{{0.5, 0.25}});
  const PointSet u = union_sets(a, a);
  REQUIRE(u.size() == 2);
  CHECK(u.point(0) == u.point(1));

  const PointSet sphere = sample_sphere(NormSpec::lp(2, 2), 64);
  CHECK(union_sets(sphere, translate_set(sphere, Point{1, 1})).size() == 128);
  CHECK(scale_set(sphere, 3).size() == 64);
}

TEST_CASE("sampling is reproducible bit for bit") {
  for (const auto& n : {NormSpec::lp(2, 2), NormSpec::lp(2, 3)}) {
    const PointSet a = sample_sphere(n, 1000);
    const PointSet b = sample_sphere(n, 1000);
    CHECK(std::equal(a.coords().begin(), a.coords().end(), b.coords().begin(), b.coords().end()));
  }
  const PointSet c = sample_sphere(NormSpec::lp(2, 3), 1000, SeededDirections{5});
  const PointSet d = sample_sphere(NormSpec::lp(2, 3), 1000, SeededDirections{6});
  CHECK_FALSE(std::equal(c.coords().begin(), c.coords().end(), d.coords().begin(), d.coords().end()));
}

TEST_CASE("euclidean angle grid floor is pi over M") {
  const double f = sampling_floor(NormSpec::lp(2, 2), 1000, AngleGrid{});
  CHECK(f == doctest::Approx(std::numbers::pi / 1000).epsilon(1e-6));
  // floor bounds the distance from any direction to the sample
  const NormSpec l1 = NormSpec::lp(1, 2);
  const PointSet s = sample_sphere(l1, 1000);
  const double fl = sampling_floor(s);
  for (int k = 0; k < 360; ++k) {
    const double a = 0.0173 * k;
    const Point p = normalize(l1, Point{std::cos(a), std::sin(a)});
    CHECK(oracle::nearest(l1, s.to_points(), p) <= fl + 1e-12);
  }
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(sample_sphere(NormSpec::lp(2, 2), 2), Error);
  CHECK_THROWS_AS(sample_sphere(NormSpec::lp(2, 3), 100, AngleGrid{}), Error);
  CHECK_THROWS_AS(scale_set(sample_sphere(NormSpec::lp(2, 2), 8), 0.0), Error);
  CHECK_THROWS_AS(translate_set(sample_sphere(NormSpec::lp(2, 2), 8), Point{1, 2, 3}), Error);
  CHECK_THROWS_AS(PointSet::from_points(std::vector<Point>{}), Error);
  CHECK_THROWS_AS(shell_offset(sample_sphere(NormSpec::lp(2, 2), 8)), Error);
}
