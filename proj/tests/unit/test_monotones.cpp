#include <gtest/gtest.h>

#include "oracle.hpp"
#include "secmon/canonical.hpp"
#include "secmon/error.hpp"
#include "secmon/monotones.hpp"
#include "secmon/random.hpp"

using namespace secmon;

namespace {

JointDistribution random_dist(std::uint64_t seed, std::size_t n, std::size_t max_card) {
  auto rng = rnd::make_engine(seed);
  return rnd::distribution(rng, rnd::party_set(rng, n, 1, max_card));
}

// Rows of the tripartite table, in the library's canonical order.
struct Row {
  const char* name;
  JointDistribution dist;
  std::array<double, 5> values;
};

std::vector<Row> table_rows() {
  return {{"P2_AB", canonical::p2_ab(), {1, 1, 0, 1, 1}},
          {"P2_AC", canonical::p2_ac(), {1, 0, 1, 1, 1}},
          {"P2_BC", canonical::p2_bc(), {0, 1, 1, 1, 1}},
          {"P3", canonical::p3(), {1, 1, 1, 1, 2}},
          {"Px", canonical::px(), {1, 1, 1, 2, 1}}};
}

// E is the last party and a copy of A.
JointDistribution p2_with_eve_copy() {
  return JointDistribution(PartySet({"A", "B", "E"}, {2, 2, 2}), {0.5, 0, 0, 0, 0, 0, 0, 0.5});
}

JointDistribution p2_with_independent_eve() {
  return tensor(JointDistribution(PartySet({"A", "B", "E"}, {2, 2, 1}), {0.5, 0, 0, 0.5}),
                JointDistribution(PartySet({"A", "B", "E"}, {1, 1, 2}), {0.5, 0.5}));
}

}  // namespace

TEST(Table, FiveVectorRows) {
  for (const auto& row : table_rows()) {
    const auto v = five_vector(row.dist).values();
    for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(v[k], row.values[k], 1e-9) << row.name << k;
  }
}

TEST(Monotones, SpecExamples) {
  EXPECT_NEAR(s_n(canonical::p3()), 1.0, 1e-12);
  EXPECT_NEAR(s_n(canonical::px()), 2.0, 1e-12);
  EXPECT_NEAR(t_n(canonical::p3()), 2.0, 1e-12);
  EXPECT_NEAR(t_n(canonical::px()), 1.0, 1e-12);
  const auto p2 = marginalize(canonical::p2_ab(), std::vector<std::string>{"A", "B"});
  EXPECT_NEAR(t_n(p2), 1.0, 1e-12);
  EXPECT_NEAR(s_n(product_of_marginals(random_dist(3, 3, 4))), 0.0, 1e-12);
  for (double lambda : {-0.5, 0.0, 0.3, 1.0, 1.7}) {
    EXPECT_NEAR(m_lambda(canonical::px(), lambda), lambda + 1, 1e-12);
    EXPECT_NEAR(m_lambda(canonical::p3(), lambda), 2 - lambda, 1e-12);
  }
  const auto p = random_dist(4, 3, 3);
  EXPECT_NEAR(m_lambda(p, 1.0), s_n(p), 1e-12);
}

TEST(Monotones, GroupedS2Examples) {
  EXPECT_NEAR(grouped_s2(canonical::p2_ab(), {{"A"}, {"B", "C"}}), 1.0, 1e-12);
  EXPECT_NEAR(grouped_s2(canonical::p2_bc(), {{"A"}, {"B", "C"}}), 0.0, 1e-12);
  EXPECT_NEAR(grouped_s2(canonical::uniform_bits({"A", "B", "C"}), {{"A", "C"}, {"B"}}), 0.0,
              1e-12);
  EXPECT_THROW(grouped_s2(canonical::p3(), {{"A"}, {"B"}, {"C"}}), InvalidArgument);
}

TEST(Monotones, ArityErrors) {
  const auto a = marginalize(canonical::p3(), std::vector<std::string>{"A"});
  EXPECT_THROW(s_n(a), InvalidArgument);
  EXPECT_THROW(t_n(a), InvalidArgument);
  const auto ab = marginalize(canonical::p3(), std::vector<std::string>{"A", "B"});
  EXPECT_THROW(five_vector(ab), InvalidArgument);
  EXPECT_THROW(venn(ab), InvalidArgument);
  EXPECT_THROW(canonical_decomposition(ab), InvalidArgument);
}

TEST(Monotones, MatchOracleOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_dist(seed, 2 + seed % 3, 4);
    EXPECT_NEAR(s_n(d), oracle::s_n(d), 1e-9);
    EXPECT_NEAR(t_n(d), oracle::t_n(d), 1e-9);
  }
}

TEST(Monotones, FormulaEquivalence) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto d = random_dist(seed + 77, 2 + seed % 3, 4);
    const double s = s_n(d);
    EXPECT_NEAR(s_n(d, SnForm::subsets), s, 1e-9);
    EXPECT_NEAR(s_n(d, SnForm::chain), s, 1e-9);
    EXPECT_NEAR(s_n(d, SnForm::recurrence), s, 1e-9);
    const double t = t_n(d);
    EXPECT_NEAR(t_n(d, TnForm::chain), t, 1e-9);
    EXPECT_NEAR(t_n(d, TnForm::relative_entropy), t, 1e-9);
  }
}

TEST(Monotones, SumIdentityAgainstOracle) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_dist(seed + 900, 2 + seed % 3, 3);
    const auto n = d.party_count();
    double cuts = 0.0;
    for (std::size_t i = 0; i < n; ++i) cuts += oracle::cmi(d, {i}, oracle::all_but(n, i));
    EXPECT_NEAR(s_n(d) + t_n(d), cuts, 1e-9);
    EXPECT_NEAR(sum_of_single_cuts(d), cuts, 1e-9);
  }
}

TEST(Monotones, AdditivityAndSymmetry) {
  EXPECT_NEAR(s_n(tensor(canonical::p3(), canonical::p3())), 2.0, 1e-12);
  EXPECT_NEAR(t_n(tensor(canonical::p3(), canonical::p3())), 4.0, 1e-12);
  EXPECT_NEAR(s_n(tensor(canonical::px(), canonical::px())), 4.0, 1e-12);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rng = rnd::make_engine(seed);
    const auto ps = rnd::party_set(rng, 3, 1, 2);
    const auto p = rnd::distribution(rng, ps);
    const auto q = rnd::distribution(rng, ps);
    const auto pq = tensor(p, q);
    EXPECT_NEAR(s_n(pq), s_n(p) + s_n(q), 1e-9);
    EXPECT_NEAR(t_n(pq), t_n(p) + t_n(q), 1e-9);
    const auto pm = tensor(p, product_of_marginals(p));
    EXPECT_NEAR(s_n(pm), s_n(p), 1e-9);
    EXPECT_NEAR(t_n(pm), t_n(p), 1e-9);
    const std::vector<std::size_t> order{1, 2, 0};
    EXPECT_NEAR(s_n(permute(p, order)), s_n(p), 1e-12);
    EXPECT_NEAR(t_n(permute(p, order)), t_n(p), 1e-12);
  }
}

TEST(Venn, SpecExamples) {
  const auto a = venn(canonical::p3());
  EXPECT_NEAR(a.r, 0, 1e-12);
  EXPECT_NEAR(a.s, 0, 1e-12);
  EXPECT_NEAR(a.t, 0, 1e-12);
  EXPECT_NEAR(a.u, 1, 1e-12);
  const auto b = venn(canonical::px());
  EXPECT_NEAR(b.r, 1, 1e-12);
  EXPECT_NEAR(b.s, 1, 1e-12);
  EXPECT_NEAR(b.t, 1, 1e-12);
  EXPECT_NEAR(b.u, -1, 1e-12);
  const auto c = venn(canonical::uniform_bits({"A", "B", "C"}));
  EXPECT_NEAR(c.r, 0, 1e-12);
  EXPECT_NEAR(c.u, 0, 1e-12);
  EXPECT_TRUE(a.positivity_holds(1e-9));
  EXPECT_TRUE(b.positivity_holds(1e-9));
}

TEST(Venn, MatchesOracleAndMonotones) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = random_dist(seed + 300, 3, 4);
    const auto v = venn(d);
    EXPECT_NEAR(v.r, oracle::cmi(d, {0}, {1}, {2}), 1e-9);
    EXPECT_NEAR(v.s, oracle::cmi(d, {1}, {2}, {0}), 1e-9);
    EXPECT_NEAR(v.t, oracle::cmi(d, {2}, {0}, {1}), 1e-9);
    EXPECT_NEAR(v.u, oracle::cmi(d, {0}, {1}) - oracle::cmi(d, {0}, {1}, {2}), 1e-9);
    EXPECT_NEAR(s_n(d), v.r + v.s + v.t + v.u, 1e-9);
    EXPECT_NEAR(t_n(d), v.r + v.s + v.t + 2 * v.u, 1e-9);
    EXPECT_TRUE(v.positivity_holds(1e-9));
  }
}

TEST(Decomposition, SpecExamples) {
  const auto y3 = canonical_decomposition(canonical::p3()).values();
  const auto yx = canonical_decomposition(canonical::px()).values();
  const auto y2 = canonical_decomposition(canonical::p2_ab()).values();
  const std::array<double, 5> e3{0, 0, 0, 0, 1}, ex{0, 0, 0, 1, 0}, e2{1, 0, 0, 0, 0};
  for (std::size_t k = 0; k < 5; ++k) {
    EXPECT_NEAR(y3[k], e3[k], 1e-12);
    EXPECT_NEAR(yx[k], ex[k], 1e-12);
    EXPECT_NEAR(y2[k], e2[k], 1e-12);
  }
}

TEST(Decomposition, ReproducesFiveVectorThroughTable) {
  const auto rows = table_rows();
  // Table rows indexed by yield slot: y1 P2_AB, y2 P2_BC, y3 P2_AC, y4 Px, y5 P3.
  const std::array<std::size_t, 5> slot_row{0, 2, 1, 4, 3};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_dist(seed + 4000, 3, 3);
    const auto y = canonical_decomposition(d);
    EXPECT_TRUE(y.feasible);
    std::array<double, 5> rebuilt{};
    for (std::size_t j = 0; j < 5; ++j) {
      EXPECT_GE(y.values()[j], -1e-9);
      for (std::size_t k = 0; k < 5; ++k) {
        rebuilt[k] += y.values()[j] * rows[slot_row[j]].values[k];
      }
    }
    const auto fv = five_vector(d).values();
    const auto via = five_vector_of_yields(y).values();
    for (std::size_t k = 0; k < 5; ++k) {
      EXPECT_NEAR(rebuilt[k], fv[k], 1e-9);
      EXPECT_NEAR(via[k], fv[k], 1e-9);
    }
  }
}

TEST(YieldBound, SpecExamples) {
  const auto px = canonical::px();
  const auto p3 = canonical::p3();
  EXPECT_NEAR(yield_bound(px, p3, {s_n_monotone()}).ratio, 2.0, 1e-12);
  EXPECT_NEAR(yield_bound(px, p3, {t_n_monotone()}).ratio, 0.5, 1e-12);
  const auto both = yield_bound(px, p3);
  EXPECT_NEAR(both.ratio, 0.5, 1e-9);
  EXPECT_EQ(both.limiting, t_n_monotone().name);
  const auto back = yield_bound(p3, px);
  EXPECT_NEAR(back.ratio, 0.5, 1e-9);
  EXPECT_EQ(back.limiting, s_n_monotone().name);

  const auto p = random_dist(8, 3, 3);
  EXPECT_NEAR(yield_bound(p, p).ratio, 1.0, 1e-12);

  const auto sq = yield_bound(tensor(p3, p3), px);
  for (const auto& [name, r] : sq.ratios) EXPECT_GE(r, 1.0 - 1e-9) << name;

  EXPECT_THROW(yield_bound(p, canonical::uniform_bits({"A", "B", "C"})), InvalidArgument);
}

TEST(Eve, AverageExamples) {
  const auto s2 = s_n_monotone();
  EXPECT_NEAR(eve_average(p2_with_eve_copy(), "E", s2), 0.0, 1e-12);
  EXPECT_NEAR(eve_average(p2_with_independent_eve(), "E", s2), 1.0, 1e-12);

  const PartySet abce({"A", "B", "C", "E"}, {2, 2, 2, 1});
  const auto p3e = tensor(JointDistribution(abce, canonical::p3().table()),
                          JointDistribution::uniform(PartySet({"A", "B", "C", "E"}, {1, 1, 1, 3})));
  const auto cut = grouped_s2_monotone({"A"});
  EXPECT_NEAR(eve_average(p3e, "E", cut), grouped_s2(canonical::p3(), {{"A"}, {"B", "C"}}),
              1e-12);
  EXPECT_THROW(eve_average(p3e, "Z", cut), InvalidArgument);
}

TEST(Eve, MinExamples) {
  const auto s2 = s_n_monotone();
  const auto indep = eve_min(p2_with_independent_eve(), "E", s2);
  EXPECT_NEAR(indep.value, 1.0, 1e-12);
  EXPECT_TRUE(indep.exhaustive);
  EXPECT_NEAR(eve_min(p2_with_eve_copy(), "E", s2).value, 0.0, 1e-12);
  EveSearchOptions none;
  none.exhaustive = false;
  EXPECT_THROW(eve_min(p2_with_eve_copy(), "E", s2, none), InvalidArgument);
}

TEST(Eve, MinNeverExceedsAverage) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto rng = rnd::make_engine(seed);
    const auto d = rnd::distribution(rng, PartySet({"A", "B", "C", "E"}, {2, 2, 2, 3}));
    EveSearchOptions opt;
    opt.random_samples = 5;
    opt.seed = seed;
    for (const auto& base : {s_n_monotone(), t_n_monotone()}) {
      const auto r = eve_min(d, "E", base, opt);
      EXPECT_LE(r.value, eve_average(d, "E", base) + 1e-12);
      EXPECT_GE(r.value, -1e-9);
    }
  }
}
