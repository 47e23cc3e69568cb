// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Criterion 7 reuses the profiles built for 1-4.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "remotal/diagnostics.hpp"
#include "remotal/farthest.hpp"
#include "remotal/harness.hpp"
#include "remotal/propcheck.hpp"
#include "remotal/serialize.hpp"

using namespace remotal;

namespace {

struct Line {
  int id;
  bool pass;
  std::string what;
  std::string detail;
};

std::vector<Line> lines;

void report(int id, bool pass, std::string what, std::string detail) {
  std::printf("criterion %d: %s  %s | %s\n", id, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  lines.push_back({id, pass, std::move(what), std::move(detail)});
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool nested(const std::vector<std::vector<std::size_t>>& sets, std::size_t& violations) {
  for (std::size_t k = 1; k < sets.size(); ++k) {
    for (std::size_t i : sets[k]) {
      if (!std::binary_search(sets[k - 1].begin(), sets[k - 1].end(), i)) ++violations;
    }
  }
  return violations == 0;
}

// A profile plus the call that rebuilt it, for the determinism rerun.
struct Tracked {
  std::string label;
  DecayProfile profile;
  std::function<DecayProfile()> rerun;
};

std::vector<Tracked> tracked;

const DecayProfile& track(std::string label, std::function<DecayProfile()> make) {
  tracked.push_back({std::move(label), make(), make});
  return tracked.back().profile;
}

std::string linf_table_csv(const std::vector<LinfRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += format_double(r.probe[0]) + ',' + format_double(r.probe[1]) + ',' + std::to_string(r.n) + ',' +
           format_double(r.d) + ',' + format_double(r.expected) + '\n';
  }
  return out;
}

constexpr std::size_t kRes = 1000000;
const NormSpec kL2 = NormSpec::lp(2, 2);
const NormSpec kL1 = NormSpec::lp(1, 2);
const NormSpec kLinf = NormSpec::lp(kInfinity, 2);
const ProfileOptions kKeep{std::nullopt, true};

std::vector<LinfRow> golden;

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  golden = reproduce_linf_r2(100, kRes);
  const double secs = seconds_since(t0);
  std::size_t ok = 0;
  double worst_ok = 0;
  std::string misses;
  for (const auto& r : golden) {
    if (r.pass) {
      ++ok;
      worst_ok = std::max(worst_ok, r.abs_err);
    } else {
      misses += fmt(" x=(%g,%g) n=%zu d=%.6g expected %.6g;", r.probe[0], r.probe[1], r.n, r.d, r.expected);
    }
  }
  const bool pass = ok == golden.size() && secs <= 120;
  report(1, pass, "max-norm golden table d(Q(x,1/n),Q(-x,1/n)) vs 2(1-1/n), n=1..100, 1e6 points",
         fmt("%zu/%zu rows within 1e-3 (max err among them %.2e), %.1fs", ok, golden.size(), worst_ok, secs) +
             (misses.empty() ? "" : "; mismatches:" + misses));
}

void criterion2() {
  const std::vector<double> sched{1e-2, 1e-3, 1e-4};
  const auto probes = draw_probes(kL2, 10, kRes, 2024);
  double worst = 0;
  for (std::size_t k = 0; k + 1 < probes.size(); k += 2) {
    const Point a = probes[k], b = probes[k + 1];
    const DecayProfile& p = track(fmt("gd_identity #%zu", k / 2),
                                  [=] { return gd_identity_profile(kL2, a, b, sched, kRes, kKeep); });
    worst = std::max(worst, std::abs(*p.rows.back().gd_gap));
  }
  report(2, worst <= 5e-2, "euclidean gd_gap at delta=1e-4, 5 random sphere pairs, 1e6 points",
         fmt("max |gd_gap| = %.4g (bound 5e-2)", worst));
}

void criterion3() {
  std::vector<double> sched;
  for (int k = 0; k <= 20; ++k) sched.push_back(1e-2 * std::pow(1e-2, k / 20.0));
  sched.back() = 1e-4;
  const DecayProfile& p =
      track("q_decay l2 (1,0)", [=] { return q_decay_profile(kL2, Point{1, 0}, sched, kRes, kKeep); });
  bool in_band = true;
  double lo = 1e9, hi = 0, dev = 0;
  for (const auto& row : p.rows) {
    const double ratio = row.q_diam / std::sqrt(row.delta);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    dev = std::max(dev, std::abs(row.q_diam - oracle::l2_q_chord(row.delta)));
    in_band = in_band && ratio >= 3.8 && ratio <= 4.2;
  }
  report(3, in_band, "euclidean q_diam within [3.8, 4.2]*sqrt(delta), delta in [1e-4, 1e-2], 1e6 points",
         fmt("q_diam/sqrt(delta) in [%.4f, %.4f] over %zu deltas; max |q_diam - exact chord| = %.2e", lo, hi,
             p.rows.size(), dev));
}

void criterion4() {
  constexpr std::size_t res = 100000;
  const auto sched = one_over_n_schedule(100);
  bool pass = true;
  std::string detail;
  for (const auto& [norm, x, name] : {std::tuple{kLinf, Point{1, 0}, "linf"}, std::tuple{kL1, Point{-1, 0}, "l1"}}) {
    const NormSpec n = norm;
    const Point probe = x;
    std::vector<DecayProfile> profiles{
        track(fmt("q_decay %s", name), [=] { return q_decay_profile(n, probe, sched, res, kKeep); }),
        track(fmt("uniform %s", name), [=] { return uniform_decay_profile(n, 8, sched, res, 7, kKeep); })};
    double dev = 0;
    for (const auto& row : profiles[0].rows) dev = std::max(dev, std::abs(row.q_diam - 2.0));
    bool rot = false, lur = false, ur = false;
    for (const auto& v : classify(profiles)) {
      rot = rot || v.kind == VerdictKind::not_rotund;
      lur = lur || v.kind == VerdictKind::not_lur;
      ur = ur || v.kind == VerdictKind::not_ur;
    }
    pass = pass && dev <= 1e-6 && rot && lur && ur;
    detail += fmt("%s: max |q_diam-2| = %.1e, NotRotund=%d NotLUR=%d NotUR=%d; ", name, dev, rot, lur, ur);
  }
  report(4, pass, "max-norm and l1 stall: q_diam = 2 for all 1/n, n<=100, and negative verdicts (1e5 points)",
         detail);
}

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteSummary s = run_property_suite(1, 10000);
  const double secs = seconds_since(t0);
  std::string detail;
  for (const auto& p : s.properties) detail += fmt("%s %zu/%zu, ", p.name.c_str(), p.failures, p.trials);
  report(5, s.all_passed() && secs <= 300, "property suite, 1e4 trials per property, seed 1",
         "failures: " + detail + fmt("%.1fs", secs));
}

void criterion6() {
  const auto palette = property_palette();
  std::mt19937_64 g(6);
  std::uniform_real_distribution<double> u(-3, 3);
  std::size_t ok = 0;
  double worst_r = 0, worst_shell = 0;
  for (int c = 0; c < 100; ++c) {
    const NormSpec& n = palette[g() % palette.size()];
    Point x(n.dim());
    do {
      for (auto& v : x) v = u(g);
    } while (n.eval(x) == 0.0);
    const BallSphereReport r = ball_sphere_check(n, x, n.dim() == 2 ? 2000 : 1500);
    const double dr = std::abs(r.ball_radius - r.sphere_radius);
    worst_r = std::max(worst_r, dr);
    worst_shell = std::max(worst_shell, r.worst_shell_deviation);
    if (r.hits_on_shell && r.worst_shell_deviation <= 1e-9 && dr <= 1e-9) ++ok;
  }
  report(6, ok == 100, "ball vs sphere at delta=0, 100 random (norm, x)",
         fmt("%d/100 agree; max radius gap %.1e, max shell deviation %.1e", int(ok), worst_r, worst_shell));
}

void criterion7() {
  std::size_t violations = 0, checked = 0;
  // the golden table's Q sets, rebuilt from the same sample
  const PointSet s = sample_sphere(kLinf, kRes);
  for (const Point& x : std::vector<Point>{{1, 0}, {1, 0.5}, {-1, 0}, {-1, -0.5}}) {
    const FarthestScan scan(s, x, kLinf);
    std::vector<std::vector<std::size_t>> sets;
    for (std::size_t n = 1; n <= 100; ++n) sets.push_back(scan.at(1.0 / double(n)).indices);
    nested(sets, violations);
    ++checked;
  }
  std::size_t csv_mismatch = 0;
  for (const auto& t : tracked) {
    nested(t.profile.index_sets, violations);
    ++checked;
    if (to_csv(t.profile) != to_csv(t.rerun())) ++csv_mismatch;
  }
  const bool table_same = linf_table_csv(golden) == linf_table_csv(reproduce_linf_r2(100, kRes));
  report(7, violations == 0 && csv_mismatch == 0 && table_same,
         "nested Q-index sets along every schedule; byte-identical CSV on rerun",
         fmt("%zu profiles checked, %zu nesting violations; %zu/%zu profile CSVs differ on rerun; golden table %s",
             checked, violations, csv_mismatch, tracked.size(), table_same ? "identical" : "DIFFERS"));
}

}  // namespace

int main() {
  std::printf("remotal %s acceptance\n", version());
  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  std::size_t passed = 0;
  for (const auto& l : lines) passed += l.pass ? 1 : 0;
  std::printf("%zu/%zu criteria pass (%.1fs)\n", passed, lines.size(), seconds_since(t0));
  return passed == lines.size() ? 0 : 1;
}
