// One PASS/FAIL line per acceptance criterion, with its runtime. Exits nonzero
// if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "secmon/canonical.hpp"
#include "secmon/io.hpp"
#include "secmon/locc.hpp"
#include "secmon/monotones.hpp"
#include "secmon/quantum.hpp"
#include "secmon/random.hpp"
#include "secmon/verify.hpp"

using namespace secmon;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

bool near(double a, double b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

std::string num(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

Outcome table_reproduction() {
  Outcome o;
  const std::array<std::pair<JointDistribution, std::array<double, 5>>, 5> rows{{
      {canonical::p2_ab(), {1, 1, 0, 1, 1}},
      {canonical::p2_ac(), {1, 0, 1, 1, 1}},
      {canonical::p2_bc(), {0, 1, 1, 1, 1}},
      {canonical::p3(), {1, 1, 1, 1, 2}},
      {canonical::px(), {1, 1, 1, 2, 1}},
  }};
  int checked = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto v = five_vector(rows[r].first).values();
    for (std::size_t k = 0; k < 5; ++k, ++checked) {
      require(o, near(v[k], rows[r].second[k]),
              "row " + std::to_string(r) + " column " + std::to_string(k) + " = " + num(v[k]));
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " values within 1e-9";
  return o;
}

Outcome protocol_golden_runs() {
  Outcome o;
  struct G {
    const char* name;
    JointDistribution source, target;
    bool s;
    double before, after;
  };
  const auto p3 = canonical::p3();
  const auto px = canonical::px();
  const std::array<G, 4> runs{{{"p3_to_p2", p3, canonical::p2_ab(), false, 2, 1},
                               {"px_to_p2", px, canonical::p2_ab(), true, 2, 1},
                               {"p3sq_to_px", tensor(p3, p3), px, false, 4, 1},
                               {"pxsq_to_p3", tensor(px, px), p3, true, 4, 1}}};
  double worst = 0.0;
  for (const auto& g : runs) {
    const auto proto = builtin_protocol(g.name);
    const auto mono = g.s ? s_n_monotone() : t_n_monotone();
    require(o, near(mono.eval(g.source), g.before), std::string(g.name) + " initial value");
    const auto end = run_protocol(g.source, proto);
    for (const auto& m : end.members()) {
      require(o, near(mono.eval(relabel(m.dist, proto.relabel)), g.after),
              std::string(g.name) + " terminal value");
    }
    const auto match = match_target(end, proto, g.target);
    worst = std::max(worst, match.max_distance);
    require(o, match.matches && match.max_distance < 1e-12,
            std::string(g.name) + " TV distance " + num(match.max_distance));
  }
  if (o.ok) o.detail = "4 protocols, max TV distance " + num(worst);
  return o;
}

Outcome forbidden_conversion() {
  Outcome o;
  const auto a = yield_bound(canonical::px(), canonical::p3(), {t_n_monotone()});
  const auto b = yield_bound(canonical::p3(), canonical::px(), {s_n_monotone()});
  require(o, near(a.ratio, 0.5), "Px->P3 via T3 = " + num(a.ratio));
  require(o, near(b.ratio, 0.5), "P3->Px via S3 = " + num(b.ratio));
  const auto full_a = yield_bound(canonical::px(), canonical::p3());
  const auto full_b = yield_bound(canonical::p3(), canonical::px());
  require(o, full_a.ratio < 1 && full_b.ratio < 1, "default monotone set allows conversion");
  if (o.ok) o.detail = "Px->P3 " + num(a.ratio) + " (T_n), P3->Px " + num(b.ratio) + " (S_n)";
  return o;
}

Outcome ghz_demo() {
  Outcome o;
  const auto g = ghz(3);
  const auto rho = g.density();
  require(o, near(q_s_n(rho), 3) && near(q_t_n(rho), 3), "GHZ (S3,T3) != (3,3)");
  const auto z = measure_all(rho, {basis_z(2), basis_z(2), basis_z(2)});
  const auto x = measure_all(rho, {basis_x(2), basis_x(2), basis_x(2)});
  require(o, near(s_n(z), 1) && near(t_n(z), 2), "z-measurement (S3,T3) != (1,2)");
  require(o, near(s_n(x), 2) && near(t_n(x), 1), "x-measurement (S3,T3) != (2,1)");
  const double initial = q_s_n(rho) + q_t_n(rho);
  for (const auto* d : {&z, &x}) {
    const auto h = sum_halving_bound(g, *d);
    require(o, h.satisfied && near(h.s_plus_t, initial / 2) && near(h.bound, initial / 2),
            "sum-halving equality fails");
  }
  if (o.ok) o.detail = "(3,3) -> z (1,2), x (2,1); 3 = 6/2";
  return o;
}

Outcome lambda_extremality() {
  Outcome o;
  const auto low = m_lambda_monotone(-0.1);
  const auto high = m_lambda_monotone(1.1);
  const double px_before = low.eval(canonical::px());
  const double px_after =
      ensemble_monotone(run_protocol(canonical::px(), builtin_protocol("px_to_p2")), low);
  const double p3_before = high.eval(canonical::p3());
  const double p3_after =
      ensemble_monotone(run_protocol(canonical::p3(), builtin_protocol("p3_to_p2")), high);
  require(o, near(px_before, -0.1 + 1) && near(p3_before, 2 - 1.1), "closed forms");
  require(o, px_after > px_before + 1e-9, "lambda=-0.1 did not increase under px_to_p2");
  require(o, p3_after > p3_before + 1e-9, "lambda=1.1 did not increase under p3_to_p2");
  if (o.ok) {
    o.detail = "lambda=-0.1: " + num(px_before) + " -> " + num(px_after) + "; lambda=1.1: " +
               num(p3_before) + " -> " + num(p3_after);
  }
  return o;
}

Outcome suite_outcome(const std::vector<verify::CheckReport>& reports) {
  Outcome o;
  std::size_t violations = 0;
  for (const auto& r : reports) {
    violations += r.failures.size();
    require(o, r.passed(), r.check_name + ": " + std::to_string(r.failures.size()) + " failures");
  }
  if (o.ok) {
    o.detail = std::to_string(reports.size()) + " checks x " +
               std::to_string(reports.front().trials) + " trials, 0 violations";
  }
  return o;
}

Outcome classical_suite() { return suite_outcome(verify::check_classical_properties(kSeed, 1000, 4, 4)); }

Outcome quantum_suite() { return suite_outcome(verify::check_quantum_properties(kSeed, 300, 64)); }

Outcome canonical_decomposition_check() {
  Outcome o;
  std::array<int, 3> cases{};  // u > 0, u == 0, u < 0
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = rnd::make_engine(verify::trial_seed(kSeed, "acceptance_decomposition", i));
    const auto cards = rnd::party_set(rng, 3, 2, 3);
    const auto d = rnd::distribution(rng, cards);
    const auto v = venn(d);
    ++cases[v.u > 1e-9 ? 0 : (v.u < -1e-9 ? 2 : 1)];
    const auto y = canonical_decomposition(d);
    const auto fv = five_vector(d).values();
    const auto back = five_vector_of_yields(y).values();
    for (std::size_t k = 0; k < 5; ++k) require(o, near(back[k], fv[k]), "trial " + std::to_string(i));
    for (auto yk : y.values()) require(o, yk >= -1e-9, "negative yield in trial " + std::to_string(i));
  }
  // The canonical distributions cover u = 0 and both signs exactly.
  for (const auto& d : {canonical::p2_ab(), canonical::p3(), canonical::px()}) {
    const auto y = canonical_decomposition(d);
    const auto fv = five_vector(d).values();
    const auto back = five_vector_of_yields(y).values();
    for (std::size_t k = 0; k < 5; ++k) require(o, near(back[k], fv[k]), "canonical input");
    require(o, y.feasible, "canonical input infeasible");
  }
  if (o.ok) {
    o.detail = "200 random (u>0: " + std::to_string(cases[0]) + ", u=0: " +
               std::to_string(cases[1]) + ", u<0: " + std::to_string(cases[2]) +
               ") plus P2, P3, Px";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (auto suite : {verify::Suite::classical, verify::Suite::eve, verify::Suite::quantum}) {
    verify::SuiteOptions opt;
    opt.seed = kSeed;
    opt.trials = 50;
    const auto a = io::to_json(verify::run_suite(suite, opt)).dump(2);
    const auto b = io::to_json(verify::run_suite(suite, opt)).dump(2);
    require(o, a == b, verify::to_string(suite) + " report differs between reruns");
  }
  if (o.ok) o.detail = "classical, eve, quantum reports byte-identical";
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 when no runtime bound applies
    std::function<Outcome()> run;
  };
  const std::array<Criterion, 9> criteria{{
      {1, "table reproduction", 1.0, table_reproduction},
      {2, "protocol golden runs", 1.0, protocol_golden_runs},
      {3, "forbidden conversion", 0.0, forbidden_conversion},
      {4, "GHZ demo", 1.0, ghz_demo},
      {5, "lambda extremality", 0.0, lambda_extremality},
      {6, "classical property suite", 60.0, classical_suite},
      {7, "quantum property suite", 300.0, quantum_suite},
      {8, "canonical decomposition", 0.0, canonical_decomposition_check},
      {9, "determinism", 0.0, determinism},
  }};

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_s > 0 && secs >= c.limit_s && o.ok) {
      o.ok = false;
      o.detail = "runtime " + num(secs) + " s exceeds " + num(c.limit_s) + " s";
    }
    if (!o.ok) ++failed;
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
