#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "remotal/setmetrics.hpp"

using namespace remotal;

namespace {

PointSet pts(std::vector<Point> p) { return PointSet::from_points(p); }

PointSet random_set(std::mt19937_64& g, std::size_t n, std::size_t dim, double shift = 0.0) {
  std::uniform_real_distribution<double> u(-2, 2);
  std::vector<double> c(n * dim);
  for (auto& v : c) v = u(g) + shift;
  return PointSet(dim, std::move(c));
}

std::vector<NormSpec> norms() {
  return {NormSpec::lp(2, 2),
          NormSpec::lp(1, 2),
          NormSpec::lp(kInfinity, 2),
          NormSpec::weighted_lp(3, {1, 2.5}),
          NormSpec::polyhedral({{1, 0}, {0.5, 1}, {-0.5, 1}, {-1, 0}, {-0.5, -1}, {0.5, -1}}),
          NormSpec::lp(2, 3),
          NormSpec::lp(1, 3),
          NormSpec::lp(kInfinity, 3)};
}

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// Value within 2e-12 relative of the oracle, and the witness re-evaluates
// to the reported value exactly.
void check_against_oracle(const NormSpec& n, const PointSet& a, const PointSet& b) {
  const auto pa = a.to_points(), pb = b.to_points();
  const MetricValue g = generalized_diameter(a, b, n);
  CHECK(rel(g.value, oracle::gd(n, pa, pb)) <= 2e-12);
  CHECK(n.distance(a[g.witness[0]], b[g.witness[1]]) == g.value);

  const MetricValue d = diameter(a, n);
  CHECK(rel(d.value, oracle::diam(n, pa)) <= 2e-12);
  CHECK(n.distance(a[d.witness[0]], a[d.witness[1]]) == d.value);

  const MetricValue h = hausdorff_distance(a, b, n);
  CHECK(rel(h.value, oracle::hausdorff(n, pa, pb)) <= 2e-12);
  CHECK(n.distance(a[h.witness[0]], b[h.witness[1]]) == h.value);

  const MetricValue m = infimal_distance(a, b, n);
  CHECK(rel(m.value, oracle::inf_dist(n, pa, pb)) <= 2e-12);
  CHECK(n.distance(a[m.witness[0]], b[m.witness[1]]) == m.value);
}

}  // namespace

TEST_CASE("diameter examples") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  const NormSpec linf = NormSpec::lp(kInfinity, 2);
  CHECK(diameter(pts({{0.4, -1}}), l2).value == 0.0);
  CHECK(diameter(pts({{1, 0}, {-1, 0}}), l2).value == 2.0);
  std::vector<Point> edge;
  for (int k = 0; k <= 40; ++k) edge.push_back({-1, -1 + 0.05 * k});
  CHECK(diameter(pts(edge), linf).value == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("generalized diameter examples") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  CHECK(generalized_diameter(pts({{0, 0}}), pts({{3, 4}}), l2).value == 5.0);
  std::mt19937_64 g(31);
  const PointSet a = random_set(g, 20, 2), b = random_set(g, 20, 2);
  CHECK(generalized_diameter(a, a, l2).value == diameter(a, l2).value);
  double m = 0;
  for (std::size_t i = 0; i < 20; ++i)
    for (std::size_t j = 0; j < 20; ++j) m = std::max(m, oracle::dist(l2, a.point(i), b.point(j)));
  CHECK(generalized_diameter(a, b, l2).value == doctest::Approx(m).epsilon(1e-14));
}

TEST_CASE("hausdorff and infimal examples") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  std::mt19937_64 g(32);
  const PointSet a = random_set(g, 30, 2);
  CHECK(hausdorff_distance(a, a, l2).value == 0.0);
  CHECK(hausdorff_distance(a, union_sets(a, a), l2).value == 0.0);
  CHECK(hausdorff_distance(pts({{0, 0}}), pts({{0, 0}, {3, 0}}), l2).value == 3.0);
  CHECK(infimal_distance(pts({{0, 0}}), pts({{3, 4}}), l2).value == 5.0);
  CHECK(infimal_distance(a, union_sets(random_set(g, 5, 2), a), l2).value == 0.0);
}

TEST_CASE("small random sets match the oracle") {
  std::mt19937_64 g(33);
  for (const auto& n : norms()) {
    for (int t = 0; t < 15; ++t) {
      const PointSet a = random_set(g, 1 + t * 3, n.dim());
      const PointSet b = random_set(g, 2 + t * 2, n.dim(), t % 3 == 0 ? 3.0 : 0.0);
      check_against_oracle(n, a, b);
      const double d = infimal_distance(a, b, n).value, h = hausdorff_distance(a, b, n).value,
                   r = generalized_diameter(a, b, n).value;
      CHECK(d <= h);
      CHECK(h <= r);
    }
  }
}

TEST_CASE("large random sets take the fast paths and still match") {
  std::mt19937_64 g(34);
  for (const auto& n : norms()) {
    const PointSet a = random_set(g, 260, n.dim());
    const PointSet b = random_set(g, 240, n.dim(), 1.0);
    check_against_oracle(n, a, b);
  }
}

TEST_CASE("tie-heavy sphere pieces match the oracle") {
  for (const auto& n : {NormSpec::lp(kInfinity, 2), NormSpec::lp(1, 2), NormSpec::lp(2, 2)}) {
    const PointSet s = sample_sphere(n, 600);
    std::vector<Point> left, low;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i][0] < -0.3) left.push_back(s.point(i));
      if (s[i][1] < 0.2) low.push_back(s.point(i));
    }
    check_against_oracle(n, pts(left), pts(low));
    check_against_oracle(n, s, s);
  }
}

TEST_CASE("collinear and duplicate inputs") {
  const NormSpec l2 = NormSpec::lp(2, 2);
  std::vector<Point> line;
  for (int k = 0; k < 300; ++k) line.push_back({0.01 * k, 0.02 * k});
  line.push_back(line.front());
  const PointSet a = pts(line);
  check_against_oracle(l2, a, a);
  check_against_oracle(NormSpec::lp(1, 2), a, scale_set(a, -1));
}

TEST_CASE("dimension mismatch") {
  CHECK_THROWS_AS(diameter(pts({{1, 2, 3}}), NormSpec::lp(2, 2)), Error);
  CHECK_THROWS_AS(hausdorff_distance(pts({{1, 2}}), pts({{1, 2, 3}}), NormSpec::lp(2, 2)), Error);
}
