#include "secmon/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include <Eigen/SVD>

#include "secmon/error.hpp"
#include "secmon/monotones.hpp"
#include "secmon/parallel.hpp"
#include "secmon/quantum.hpp"
#include "secmon/random.hpp"
#include "secmon/tolerance.hpp"

namespace secmon::verify {

namespace {

using rnd::Engine;

class Sink {
 public:
  Sink(std::uint64_t seed, std::vector<Failure>& out) : seed_(seed), out_(out) {}

  void fail(std::string what, double observed, double bound) {
    out_.push_back({seed_, std::move(what), observed, bound});
  }
  // observed <= bound + tol
  void le(std::string what, double observed, double bound, double tol) {
    if (!(observed <= bound + tol)) fail(std::move(what), observed, bound);
  }
  // observed >= bound - tol
  void ge(std::string what, double observed, double bound, double tol) {
    if (!(observed >= bound - tol)) fail(std::move(what), observed, bound);
  }
  void near(std::string what, double observed, double expected, double tol) {
    if (!(std::abs(observed - expected) <= tol)) fail(std::move(what), observed, expected);
  }

 private:
  std::uint64_t seed_;
  std::vector<Failure>& out_;
};

using TrialFn = std::function<void(Engine&, Sink&)>;

struct Check {
  std::string name;
  double tolerance = tol::kBits;
  bool required = true;
  bool fixed = false;  // deterministic; runs once
  TrialFn trial;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Failure> run_trial(const Check& check, std::uint64_t seed) {
  std::vector<Failure> out;
  Sink sink(seed, out);
  try {
    auto rng = rnd::make_engine(seed);
    check.trial(rng, sink);
  } catch (const std::exception& e) {
    sink.fail(std::string("exception: ") + e.what(), 0.0, 0.0);
  }
  return out;
}

void sort_failures(std::vector<Failure>& f) {
  std::stable_sort(f.begin(), f.end(), [](const Failure& a, const Failure& b) {
    return std::tie(a.seed, a.description) < std::tie(b.seed, b.description);
  });
}

std::vector<CheckReport> run_checks(const std::vector<Check>& checks, std::uint64_t master,
                                    std::size_t trials) {
  if (trials == 0) throw InvalidArgument("trials must be >= 1");
  std::vector<CheckReport> reports;
  for (const auto& check : checks) {
    const std::size_t n = check.fixed ? 1 : trials;
    std::vector<std::vector<Failure>> per(n);
    parallel_for(n, [&](std::size_t t) {
      per[t] = run_trial(check, trial_seed(master, check.name, t));
    });
    CheckReport r;
    r.check_name = check.name;
    r.trials = n;
    r.tolerance = check.tolerance;
    r.required = check.required;
    for (auto& f : per) {
      for (auto& x : f) r.failures.push_back(std::move(x));
    }
    sort_failures(r.failures);
    reports.push_back(std::move(r));
  }
  return reports;
}

// --- classical ----------------------------------------------------------------

struct NamedMonotone {
  std::string name;
  std::function<Bits(const JointDistribution&)> eval;
};

std::vector<NamedMonotone> classical_monotones(const ClassicalHooks& hooks, double lambda) {
  std::function<Bits(const JointDistribution&)> s =
      hooks.s_n ? hooks.s_n : [](const JointDistribution& d) { return s_n(d); };
  return {{"S_n", s},
          {"T_n", [](const JointDistribution& d) { return t_n(d); }},
          {"M_lambda", [s, lambda](const JointDistribution& d) {
             return lambda * s(d) + (1.0 - lambda) * t_n(d);
           }}};
}

JointDistribution random_distribution(Engine& rng, std::size_t min_parties, std::size_t max_parties,
                                      std::size_t max_alphabet) {
  const auto n = rnd::uniform_index(rng, min_parties, max_parties);
  return rnd::distribution(rng, rnd::party_set(rng, n, 2, max_alphabet));
}

std::string party_of(const JointDistribution& d, Engine& rng) {
  return d.parties().label(rnd::uniform_index(rng, 0, d.party_count() - 1));
}

StochasticChannel random_channel(Engine& rng, std::size_t in, std::size_t out) {
  // Half deterministic maps, half full-support channels.
  if (rnd::uniform_index(rng, 0, 1) == 0) return rnd::deterministic_channel(rng, in, out);
  return rnd::channel(rng, in, out);
}

std::vector<Check> classical_checks(std::size_t max_parties, std::size_t max_alphabet,
                                    const ClassicalHooks& hooks) {
  const auto mp = max_parties, ma = max_alphabet;
  auto draw = [mp, ma](Engine& rng) { return random_distribution(rng, 2, mp, ma); };
  auto monotones = [hooks](Engine& rng) {
    return classical_monotones(hooks, rnd::uniform_real(rng, 0.0, 1.0));
  };
  std::vector<Check> c;

  c.push_back({"positivity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 for (const auto& m : monotones(rng)) {
                   sink.ge(m.name + " >= 0", m.eval(p), 0.0, tol::kBits);
                 }
               }});

  c.push_back({"product_vanishing", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto q = product_of_marginals(draw(rng));
                 for (const auto& m : monotones(rng)) {
                   sink.near(m.name + " = 0 on product of marginals", m.eval(q), 0.0, tol::kBits);
                 }
               }});

  c.push_back({"local_channel_monotonicity", tol::kBits, true, false,
               [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto ms = monotones(rng);
                 const auto party = party_of(p, rng);
                 const auto in = p.parties().cardinality(p.parties().index_of(party));
                 const auto ch = random_channel(rng, in, rnd::uniform_index(rng, 1, ma));
                 const auto q = apply_channel(p, party, ch);
                 for (const auto& m : ms) {
                   sink.le(m.name + " after channel on " + party, m.eval(q), m.eval(p),
                           tol::kBits);
                 }
               }});

  c.push_back({"announcement_monotonicity", tol::kBits, true, false,
               [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto ms = monotones(rng);
                 const auto party = party_of(p, rng);
                 const auto in = p.parties().cardinality(p.parties().index_of(party));
                 const auto ch = random_channel(rng, in, rnd::uniform_index(rng, 2, 3));
                 const auto ens = announce(p, party, ch);
                 for (const auto& m : ms) {
                   Bits avg = 0.0;
                   for (const auto& member : ens.members()) avg += member.weight * m.eval(member.dist);
                   sink.le(m.name + " averaged after announcement by " + party, avg, m.eval(p),
                           tol::kBits);
                 }
               }});

  c.push_back({"additivity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto q = rnd::distribution(rng, rnd::party_set(rng, p.party_count(), 1, 2));
                 const auto pq = tensor(p, q);
                 for (const auto& m : monotones(rng)) {
                   sink.near(m.name + "(P x Q) = " + m.name + "(P) + " + m.name + "(Q)", m.eval(pq),
                             m.eval(p) + m.eval(q), tol::kBits);
                 }
               }});

  c.push_back({"perturbation_stability", 1e-3, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto r = rnd::distribution(rng, p.parties());
                 const double eps = rnd::uniform_real(rng, 0.0, 1e-6);
                 std::vector<double> t(p.table().size());
                 for (std::size_t i = 0; i < t.size(); ++i) {
                   t[i] = (1.0 - eps) * p.table()[i] + eps * r.table()[i];
                 }
                 const auto q = JointDistribution::computed(p.parties(), std::move(t));
                 for (const auto& m : monotones(rng)) {
                   sink.near(m.name + " shift under 1e-6 perturbation", m.eval(q), m.eval(p), 1e-3);
                 }
               }});

  c.push_back({"permutation_symmetry", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 std::vector<std::size_t> order(p.party_count());
                 std::iota(order.begin(), order.end(), 0);
                 std::shuffle(order.begin(), order.end(), rng);
                 const auto q = permute(p, order);
                 for (const auto& m : monotones(rng)) {
                   sink.near(m.name + " under party permutation", m.eval(q), m.eval(p), tol::kBits);
                 }
               }});

  c.push_back({"s_n_formula_equivalence", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto def = s_n(p, SnForm::definition);
                 sink.near("S_n subsets form", s_n(p, SnForm::subsets), def, tol::kBits);
                 sink.near("S_n chain form", s_n(p, SnForm::chain), def, tol::kBits);
                 sink.near("S_n recurrence", s_n(p, SnForm::recurrence), def, tol::kBits);
               }});

  c.push_back({"t_n_formula_equivalence", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto def = t_n(p, TnForm::definition);
                 sink.near("T_n chain form", t_n(p, TnForm::chain), def, tol::kBits);
                 sink.near("T_n relative-entropy form", t_n(p, TnForm::relative_entropy), def,
                           tol::kBits);
               }});

  c.push_back({"two_party_collapse", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = random_distribution(rng, 2, 2, ma);
                 const auto i = mutual_information(p, bit(0), bit(1));
                 sink.near("S_2 = I(A:B)", s_n(p), i, tol::kBits);
                 sink.near("T_2 = I(A:B)", t_n(p), i, tol::kBits);
               }});

  c.push_back({"sum_identity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = draw(rng);
                 const auto all = p.parties().all();
                 Bits cuts = 0.0;
                 for (std::size_t i = 0; i < p.party_count(); ++i) {
                   cuts += mutual_information(p, bit(i), all & ~bit(i));
                 }
                 sink.near("S_n + T_n = sum_i I(A_i : rest)", s_n(p) + t_n(p), cuts, tol::kBits);
               }});

  c.push_back({"venn_positivity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = random_distribution(rng, 3, 3, ma);
                 const auto q = venn(p);
                 sink.ge("r", q.r, 0.0, tol::kBits);
                 sink.ge("s", q.s, 0.0, tol::kBits);
                 sink.ge("t", q.t, 0.0, tol::kBits);
                 sink.ge("r + u", q.r + q.u, 0.0, tol::kBits);
                 sink.ge("s + u", q.s + q.u, 0.0, tol::kBits);
                 sink.ge("t + u", q.t + q.u, 0.0, tol::kBits);
               }});

  c.push_back({"canonical_decomposition", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = random_distribution(rng, 3, 3, ma);
                 const auto y = canonical_decomposition(p);
                 const std::string regime = venn(p).u >= 0.0 ? "u >= 0" : "u < 0";
                 const auto yv = y.values();
                 for (std::size_t k = 0; k < yv.size(); ++k) {
                   sink.ge(regime + ": y" + std::to_string(k + 1) + " >= 0", yv[k], 0.0, tol::kBits);
                 }
                 if (!y.feasible) sink.fail(regime + ": decomposition flagged infeasible", 0.0, 1.0);
                 const auto want = five_vector(p).values();
                 const auto got = five_vector_of_yields(y).values();
                 for (std::size_t k = 0; k < want.size(); ++k) {
                   sink.near(regime + ": five-vector component " + std::to_string(k), got[k],
                             want[k], tol::kBits);
                 }
               }});

  return c;
}

// --- Eve ------------------------------------------------------------------------

JointDistribution random_eve_instance(Engine& rng) {
  std::vector<std::size_t> cards;
  for (int i = 0; i < 4; ++i) cards.push_back(rnd::uniform_index(rng, 2, 3));
  return rnd::distribution(rng, PartySet({"A", "B", "C", "E"}, std::move(cards)));
}

std::size_t eve_card(const JointDistribution& d) { return d.parties().cardinality(3); }

std::vector<Monotone> eve_bases() { return {s_n_monotone(), t_n_monotone()}; }

Bits mdown(const JointDistribution& d, const Monotone& base) {
  return eve_min(d, "E", base).value;
}

std::vector<Check> eve_checks() {
  std::vector<Check> c;

  c.push_back({"m1_eve_announcement", tol::kBits, true, false, [](Engine& rng, Sink& sink) {
                 const auto p = random_eve_instance(rng);
                 const auto ch = rnd::channel(rng, eve_card(p), rnd::uniform_index(rng, 2, 3));
                 const auto ens = announce(p, "E", ch);
                 for (const auto& base : eve_bases()) {
                   Bits avg = 0.0;
                   for (const auto& m : ens.members()) avg += m.weight * eve_average(m.dist, "E", base);
                   sink.ge("M1[" + base.name + "] averaged after Eve announces", avg,
                           eve_average(p, "E", base), tol::kBits);
                 }
               }});

  // M1 need not survive Eve's local operations; violations
  // found here are findings.
  c.push_back({"m1_eve_local_operation_search", tol::kBits, false, false,
               [](Engine& rng, Sink& sink) {
                 const auto p = random_eve_instance(rng);
                 const auto ch = random_channel(rng, eve_card(p), rnd::uniform_index(rng, 1, 3));
                 const auto q = apply_channel(p, "E", ch);
                 for (const auto& base : eve_bases()) {
                   sink.ge("M1[" + base.name + "] after Eve's local channel", eve_average(q, "E", base),
                           eve_average(p, "E", base), tol::kBits);
                 }
               }});

  c.push_back({"mdown_eve_local_operation", tol::kBits, true, false, [](Engine& rng, Sink& sink) {
                 const auto p = random_eve_instance(rng);
                 const auto f = rnd::deterministic_channel(rng, eve_card(p), eve_card(p));
                 const auto q = apply_channel(p, "E", f);
                 for (const auto& base : eve_bases()) {
                   sink.ge("M_down[" + base.name + "] after Eve's deterministic map", mdown(q, base),
                           mdown(p, base), tol::kBits);
                 }
               }});

  c.push_back({"mdown_eve_announcement", tol::kBits, true, false, [](Engine& rng, Sink& sink) {
                 const auto p = random_eve_instance(rng);
                 const auto h =
                     rnd::deterministic_channel(rng, eve_card(p), rnd::uniform_index(rng, 2, 3));
                 const auto ens = announce(p, "E", h);
                 for (const auto& base : eve_bases()) {
                   Bits avg = 0.0;
                   for (const auto& m : ens.members()) avg += m.weight * mdown(m.dist, base);
                   sink.ge("M_down[" + base.name + "] averaged after Eve announces", avg,
                           mdown(p, base), tol::kBits);
                 }
               }});

  c.push_back({"mdown_below_m1", tol::kBits, true, false, [](Engine& rng, Sink& sink) {
                 const auto p = random_eve_instance(rng);
                 for (const auto& base : eve_bases()) {
                   sink.le("M_down[" + base.name + "] <= M1", mdown(p, base), eve_average(p, "E", base),
                           tol::kBits);
                 }
               }});

  return c;
}

// --- quantum ----------------------------------------------------------------------

PartySet random_qparties(Engine& rng, std::size_t min_n, std::size_t max_n, std::size_t max_dim) {
  const auto n = rnd::uniform_index(rng, min_n, max_n);
  auto ps = rnd::party_set(rng, n, 2, 3);
  auto cards = ps.cardinalities();
  auto total = [&] {
    return std::accumulate(cards.begin(), cards.end(), std::size_t{1}, std::multiplies<>());
  };
  while (total() > max_dim) {
    auto it = std::max_element(cards.begin(), cards.end());
    if (*it <= 2) break;
    --*it;
  }
  return PartySet(ps.labels(), cards);
}

DensityMatrix random_state(Engine& rng, const PartySet& ps) {
  if (rnd::uniform_index(rng, 0, 1) == 0) return qrnd::pure_state(rng, ps).density();
  return qrnd::mixed_state(rng, ps);
}

Bits sum_local_entropies(const DensityMatrix& rho) {
  Bits sum = 0.0;
  for (std::size_t i = 0; i < rho.parties().size(); ++i) sum += subsystem_entropy(rho, bit(i));
  return sum;
}

// Every party measures its instrument; outcome k of party i is symbol k.
JointDistribution measure_locally(const DensityMatrix& rho, const std::vector<Instrument>& insts) {
  const auto& ps = rho.parties();
  std::vector<std::size_t> cards;
  for (const auto& inst : insts) cards.push_back(inst.outcomes().size());
  PartySet out(ps.labels(), cards);
  std::vector<double> table(out.total(), 0.0);
  const auto strides = out.strides();

  std::function<void(const DensityMatrix&, std::size_t, double, std::size_t)> rec =
      [&](const DensityMatrix& state, std::size_t i, double w, std::size_t index) {
        if (i == insts.size()) {
          table[index] += w;
          return;
        }
        const auto ens = measure_and_announce(state, ps.label(i), insts[i]);
        for (const auto& m : ens.members()) {
          const auto k = static_cast<std::size_t>(std::stoul(m.outcome));
          rec(m.state, i + 1, w * m.weight, index + k * strides[i]);
        }
      };
  rec(rho, 0, 1.0, 0);
  return JointDistribution::computed(std::move(out), std::move(table));
}

std::vector<Instrument> random_instruments(Engine& rng, const PartySet& ps) {
  std::vector<Instrument> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto d = ps.cardinality(i);
    if (rnd::uniform_index(rng, 0, 1) == 0) {
      out.push_back(Instrument::projective(qrnd::unitary(rng, d)));
    } else {
      out.push_back(qrnd::instrument(rng, d, rnd::uniform_index(rng, 2, 3)));
    }
  }
  return out;
}

std::vector<Check> quantum_checks(std::size_t max_dim) {
  auto draw = [max_dim](Engine& rng) {
    const auto ps = random_qparties(rng, 2, 4, max_dim);
    return random_state(rng, ps);
  };
  std::vector<Check> c;

  c.push_back({"quantum_positivity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto rho = draw(rng);
                 sink.ge("S_n >= 0", q_s_n(rho), 0.0, tol::kBits);
                 sink.ge("T_n >= 0", q_t_n(rho), 0.0, tol::kBits);
               }});

  c.push_back({"pure_state_equality", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto psi = qrnd::pure_state(rng, random_qparties(rng, 2, 4, max_dim));
                 const auto rho = psi.density();
                 const auto local = sum_local_entropies(rho);
                 sink.near("S_n = sum_i S(rho_i)", q_s_n(rho), local, tol::kBits);
                 sink.near("T_n = sum_i S(rho_i)", q_t_n(rho), local, tol::kBits);
                 sink.near("pure_state_monotone", pure_state_monotone(psi), local, tol::kBits);
               }});

  c.push_back({"cp_map_monotonicity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto rho = draw(rng);
                 const auto& ps = rho.parties();
                 const auto j = rnd::uniform_index(rng, 0, ps.size() - 1);
                 const auto in = ps.cardinality(j);
                 const auto out = rnd::uniform_index(rng, 1, 3);
                 auto kraus = rnd::uniform_index(rng, 1, 3);
                 while (out * kraus < in) ++kraus;
                 const auto ch = qrnd::channel(rng, in, out, kraus);
                 const auto sigma = apply_local_channel(rho, ps.label(j), ch);
                 sink.le("S_n after CP map on " + ps.label(j), q_s_n(sigma), q_s_n(rho), tol::kBits);
                 sink.le("T_n after CP map on " + ps.label(j), q_t_n(sigma), q_t_n(rho), tol::kBits);
               }});

  c.push_back({"povm_announcement_monotonicity", tol::kBits, true, false,
               [=](Engine& rng, Sink& sink) {
                 const auto rho = draw(rng);
                 const auto& ps = rho.parties();
                 const auto j = rnd::uniform_index(rng, 0, ps.size() - 1);
                 const auto inst =
                     qrnd::instrument(rng, ps.cardinality(j), rnd::uniform_index(rng, 2, 3));
                 const auto ens = measure_and_announce(rho, ps.label(j), inst);
                 Bits s = 0.0, t = 0.0;
                 for (const auto& m : ens.members()) {
                   s += m.weight * q_s_n(m.state);
                   t += m.weight * q_t_n(m.state);
                 }
                 sink.le("S_n averaged after POVM by " + ps.label(j), s, q_s_n(rho), tol::kBits);
                 sink.le("T_n averaged after POVM by " + ps.label(j), t, q_t_n(rho), tol::kBits);
               }});

  c.push_back({"strong_subadditivity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto rho = random_state(rng, random_qparties(rng, 3, 3, max_dim));
                 const PartyMask a = bit(0), b = bit(1), cc = bit(2);
                 sink.ge("I(A:B|C)", q_conditional_mutual_information(rho, a, b, cc), 0.0, tol::kBits);
                 sink.ge("I(B:C|A)", q_conditional_mutual_information(rho, b, cc, a), 0.0, tol::kBits);
                 sink.ge("I(C:A|B)", q_conditional_mutual_information(rho, cc, a, b), 0.0, tol::kBits);
               }});

  c.push_back({"quantum_sum_identity", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto rho = draw(rng);
                 const auto all = rho.parties().all();
                 const auto whole = subsystem_entropy(rho, all);
                 Bits cuts = 0.0;
                 for (std::size_t i = 0; i < rho.parties().size(); ++i) {
                   cuts += subsystem_entropy(rho, bit(i)) + subsystem_entropy(rho, all & ~bit(i)) -
                           whole;
                 }
                 sink.near("S_n + T_n = sum_i I(A_i : rest)", q_s_n(rho) + q_t_n(rho), cuts,
                           tol::kBits);
               }});

  c.push_back({"quantum_formula_rewrites", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto rho = draw(rng);
                 const auto s = q_s_n(rho, SnForm::subsets);
                 sink.near("S_n definition form", q_s_n(rho, SnForm::definition), s, tol::kBits);
                 sink.near("S_n chain form", q_s_n(rho, SnForm::chain), s, tol::kBits);
                 sink.near("S_n recurrence", q_s_n(rho, SnForm::recurrence), s, tol::kBits);
                 sink.near("T_n chain form", q_t_n(rho, TnForm::chain), q_t_n(rho), tol::kBits);
               }});

  c.push_back({"classical_embedding", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto p = rnd::distribution(rng, random_qparties(rng, 2, 4, max_dim));
                 const auto rho = DensityMatrix::diagonal(p);
                 sink.near("quantum S_n of diagonal state", q_s_n(rho), s_n(p), tol::kBits);
                 sink.near("quantum T_n of diagonal state", q_t_n(rho), t_n(p), tol::kBits);
               }});

  c.push_back({"holevo_bound", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto ps = random_qparties(rng, 2, 2, max_dim);
                 const auto psi = qrnd::pure_state(rng, ps);
                 const auto rho = psi.density();
                 const auto sa = subsystem_entropy(rho, bit(0));
                 sink.near("S(rho_A) = S(rho_B)", subsystem_entropy(rho, bit(1)), sa, tol::kBits);

                 const auto da = ps.cardinality(0), db = ps.cardinality(1);
                 const auto random = measure_all(rho, {qrnd::unitary(rng, da), qrnd::unitary(rng, db)});
                 sink.le("I(A:B) after random local bases", mutual_information(random, bit(0), bit(1)),
                         sa, tol::kBits);

                 const auto ia = static_cast<Eigen::Index>(da), ib = static_cast<Eigen::Index>(db);
                 CMatrix amp(ia, ib);
                 for (Eigen::Index i = 0; i < ia; ++i) {
                   for (Eigen::Index k = 0; k < ib; ++k) amp(i, k) = psi.amplitudes()(i * ib + k);
                 }
                 Eigen::JacobiSVD<CMatrix> svd(amp, Eigen::ComputeFullU | Eigen::ComputeFullV);
                 const auto schmidt =
                     measure_all(rho, {svd.matrixU(), CMatrix(svd.matrixV().conjugate())});
                 sink.near("I(A:B) in the Schmidt basis", mutual_information(schmidt, bit(0), bit(1)),
                           sa, tol::kBits);
               }});

  c.push_back({"sum_halving", tol::kBits, true, false, [=](Engine& rng, Sink& sink) {
                 const auto ps = random_qparties(rng, 2, 3, max_dim);
                 const auto psi = qrnd::pure_state(rng, ps);
                 const auto rho = psi.density();
                 const auto bound = sum_local_entropies(rho);

                 // No communication: every party measures a random POVM.
                 const auto direct = measure_locally(rho, random_instruments(rng, ps));
                 sink.le("S_n + T_n after local measurements", s_n(direct) + t_n(direct), bound,
                         tol::kBits);

                 // One party measures a random basis and announces the result;
                 // then everyone measures, with choices depending on the result.
                 const auto j = rnd::uniform_index(rng, 0, ps.size() - 1);
                 const auto first = Instrument::projective(qrnd::unitary(rng, ps.cardinality(j)));
                 const auto ens = measure_and_announce(rho, ps.label(j), first);
                 Bits avg = 0.0;
                 for (const auto& m : ens.members()) {
                   const auto d = measure_locally(m.state, random_instruments(rng, ps));
                   avg += m.weight * (s_n(d) + t_n(d));
                 }
                 sink.le("S_n + T_n averaged after one announcement round", avg, bound, tol::kBits);
               }});

  c.push_back({"ghz_values", tol::kBits, true, true, [](Engine&, Sink& sink) {
                 const auto g = ghz(3).density();
                 sink.near("S_3(GHZ)", q_s_n(g), 3.0, tol::kBits);
                 sink.near("T_3(GHZ)", q_t_n(g), 3.0, tol::kBits);
                 const auto z = measure_all(g, {basis_z(2), basis_z(2), basis_z(2)});
                 const auto x = measure_all(g, {basis_x(2), basis_x(2), basis_x(2)});
                 sink.near("S_3 after z measurement", s_n(z), 1.0, tol::kBits);
                 sink.near("T_3 after z measurement", t_n(z), 2.0, tol::kBits);
                 sink.near("S_3 after x measurement", s_n(x), 2.0, tol::kBits);
                 sink.near("T_3 after x measurement", t_n(x), 1.0, tol::kBits);
                 const double half = (q_s_n(g) + q_t_n(g)) / 2.0;
                 sink.near("S_3 + T_3 after z = half the initial sum", s_n(z) + t_n(z), half,
                           tol::kBits);
                 sink.near("S_3 + T_3 after x = half the initial sum", s_n(x) + t_n(x), half,
                           tol::kBits);
                 const auto bell = ghz(2).density();
                 sink.near("S_2(Bell)", q_s_n(bell), 2.0, tol::kBits);
                 sink.near("T_2(Bell)", q_t_n(bell), 2.0, tol::kBits);
               }});

  return c;
}

void check_classical_options(std::size_t max_parties, std::size_t max_alphabet) {
  if (max_parties < 2) throw InvalidArgument("max_parties must be >= 2");
  if (max_alphabet < 2) throw InvalidArgument("max_alphabet must be >= 2");
}

void check_quantum_options(std::size_t max_dim) {
  if (max_dim < 8 || max_dim > tol::kMaxHilbertDim) {
    throw InvalidArgument("max_dim must lie in [8, 4096]");
  }
}

std::vector<Check> checks_of(Suite suite, const SuiteOptions& o) {
  switch (suite) {
    case Suite::classical:
      check_classical_options(o.max_parties, o.max_alphabet);
      return classical_checks(o.max_parties, o.max_alphabet, o.hooks);
    case Suite::eve:
      return eve_checks();
    case Suite::quantum:
      check_quantum_options(o.max_dim);
      return quantum_checks(o.max_dim);
  }
  throw InvalidArgument("unknown suite");
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, const std::string& check, std::size_t index) {
  return rnd::derive_seed(master, fnv1a(check), index);
}

std::vector<CheckReport> check_classical_properties(std::uint64_t seed, std::size_t trials,
                                                    std::size_t max_parties,
                                                    std::size_t max_alphabet,
                                                    const ClassicalHooks& hooks) {
  check_classical_options(max_parties, max_alphabet);
  return run_checks(classical_checks(max_parties, max_alphabet, hooks), seed, trials);
}

std::vector<CheckReport> check_eve_properties(std::uint64_t seed, std::size_t trials) {
  return run_checks(eve_checks(), seed, trials);
}

std::vector<CheckReport> check_quantum_properties(std::uint64_t seed, std::size_t trials,
                                                  std::size_t max_dim) {
  check_quantum_options(max_dim);
  return run_checks(quantum_checks(max_dim), seed, trials);
}

std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& o) {
  return run_checks(checks_of(suite, o), o.seed, o.trials);
}

std::vector<Failure> rerun_trial(Suite suite, const std::string& check, std::uint64_t seed,
                                 const SuiteOptions& options) {
  for (const auto& c : checks_of(suite, options)) {
    if (c.name == check) {
      auto f = run_trial(c, seed);
      sort_failures(f);
      return f;
    }
  }
  throw InvalidArgument("unknown check '" + check + "'");
}

std::vector<std::string> check_names(Suite suite) {
  std::vector<std::string> out;
  for (const auto& c : checks_of(suite, SuiteOptions{})) out.push_back(c.name);
  return out;
}

Suite suite_from_string(const std::string& name) {
  if (name == "classical") return Suite::classical;
  if (name == "eve") return Suite::eve;
  if (name == "quantum") return Suite::quantum;
  throw InvalidArgument("unknown suite '" + name + "' (expected classical, eve, quantum or all)");
}

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::classical:
      return "classical";
    case Suite::eve:
      return "eve";
    case Suite::quantum:
      return "quantum";
  }
  return "?";
}

bool all_required_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return !r.required || r.passed(); });
}

}  // namespace secmon::verify
