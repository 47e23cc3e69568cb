#include <benchmark/benchmark.h>

#include <random>

#include "remotal/diagnostics.hpp"
#include "remotal/farthest.hpp"
#include "remotal/propcheck.hpp"
#include "remotal/setmetrics.hpp"

using namespace remotal;

namespace {

const NormSpec& norm_for(int which) {
  static const NormSpec norms[] = {NormSpec::lp(2, 2), NormSpec::lp(1, 2), NormSpec::lp(kInfinity, 2),
                                   NormSpec::weighted_lp(3, {1, 2.5})};
  return norms[which];
}

const char* norm_name(int which) {
  static const char* names[] = {"l2", "l1", "linf", "wl3"};
  return names[which];
}

PointSet q_slice(int which, std::size_t res, double delta) {
  const NormSpec& n = norm_for(which);
  const PointSet s = sample_sphere(n, res);
  return select(s, almost_farthest_set(s, Point{1, 0}, n, delta).indices);
}

void BM_SampleSphere(benchmark::State& state) {
  const NormSpec& n = norm_for(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sample_sphere(n, std::size_t(state.range(1))));
  state.SetLabel(norm_name(int(state.range(0))));
}
BENCHMARK(BM_SampleSphere)->ArgsProduct({{0, 3}, {100000, 1000000}})->Unit(benchmark::kMillisecond);

void BM_FarthestScan(benchmark::State& state) {
  const NormSpec& n = norm_for(int(state.range(0)));
  const PointSet s = sample_sphere(n, std::size_t(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(FarthestScan(s, Point{0.3, 0.7}, n).radius());
  state.SetLabel(norm_name(int(state.range(0))));
}
BENCHMARK(BM_FarthestScan)->ArgsProduct({{0, 2}, {100000, 1000000}})->Unit(benchmark::kMillisecond);

// Planar max pair on large tie-heavy Q sets.
void BM_DiameterPlanar(benchmark::State& state) {
  const int which = int(state.range(0));
  const PointSet q = q_slice(which, 1000000, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(q, norm_for(which)).value);
  state.SetLabel(std::string(norm_name(which)) + " |Q|=" + std::to_string(q.size()));
}
BENCHMARK(BM_DiameterPlanar)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_InfimalKd(benchmark::State& state) {
  const int which = int(state.range(0));
  const NormSpec& n = norm_for(which);
  const PointSet s = sample_sphere(n, 1000000);
  const PointSet a = select(s, almost_farthest_set(s, Point{1, 0}, n, 0.5).indices);
  const PointSet b = select(s, almost_farthest_set(s, Point{-1, 0}, n, 0.5).indices);
  for (auto _ : state) benchmark::DoNotOptimize(infimal_distance(a, b, n).value);
  state.SetLabel(norm_name(which));
}
BENCHMARK(BM_InfimalKd)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_HausdorffToPoint(benchmark::State& state) {
  const int which = int(state.range(0));
  const PointSet q = q_slice(which, 1000000, 0.5);
  const PointSet p = PointSet::from_points(std::vector<Point>{{-1, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance(q, p, norm_for(which)).value);
  state.SetLabel(norm_name(which));
}
BENCHMARK(BM_HausdorffToPoint)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_MetricsRandom3d(benchmark::State& state) {
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(-1, 1);
  const std::size_t n = std::size_t(state.range(0));
  std::vector<double> ca(3 * n), cb(3 * n);
  for (auto& c : ca) c = u(g);
  for (auto& c : cb) c = u(g) + 0.5;
  const PointSet a(3, ca), b(3, cb);
  const NormSpec l2 = NormSpec::lp(2, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generalized_diameter(a, b, l2).value);
    benchmark::DoNotOptimize(hausdorff_distance(a, b, l2).value);
  }
}
BENCHMARK(BM_MetricsRandom3d)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_QDecayProfile(benchmark::State& state) {
  const auto sched = one_over_n_schedule(100, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(q_decay_profile(norm_for(0), Point{1, 0}, sched, 1000000));
}
BENCHMARK(BM_QDecayProfile)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_PropertyCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_gd_axioms(1, 1000));
}
BENCHMARK(BM_PropertyCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
