#include <gtest/gtest.h>

#include "oracle.hpp"
#include "secmon/canonical.hpp"
#include "secmon/entropy.hpp"
#include "secmon/error.hpp"
#include "secmon/random.hpp"

using namespace secmon;

namespace {

using L = std::vector<std::string>;

JointDistribution random_dist(std::uint64_t seed, std::size_t n, std::size_t max_card) {
  auto rng = rnd::make_engine(seed);
  return rnd::distribution(rng, rnd::party_set(rng, n, 1, max_card));
}

}  // namespace

TEST(Entropy, SpecExamples) {
  EXPECT_NEAR(shannon_entropy(canonical::p3(), L{"A", "B", "C"}), 1.0, 1e-12);
  EXPECT_NEAR(shannon_entropy(canonical::px(), L{"A", "B", "C"}), 2.0, 1e-12);
  const std::vector<std::size_t> o{1, 0, 1};
  const auto point = JointDistribution::point(PartySet({"A", "B", "C"}, {2, 2, 2}), o);
  for (PartyMask m = 0; m < 8; ++m) EXPECT_EQ(shannon_entropy(point, m), 0.0);

  EXPECT_NEAR(conditional_entropy(canonical::p3(), L{"C"}, L{"A", "B"}), 0.0, 1e-12);
  EXPECT_NEAR(conditional_entropy(canonical::uniform_bits({"A", "B"}), L{"A"}, L{"B"}), 1.0,
              1e-12);
  EXPECT_NEAR(conditional_entropy(canonical::px(), L{"C"}, L{"A", "B"}), 0.0, 1e-12);

  EXPECT_NEAR(mutual_information(canonical::p2_ab(), L{"A"}, L{"B"}), 1.0, 1e-12);
  EXPECT_NEAR(mutual_information(canonical::px(), L{"A"}, L{"B"}), 0.0, 1e-12);
  EXPECT_NEAR(conditional_mutual_information(canonical::px(), L{"A"}, L{"B"}, L{"C"}), 1.0, 1e-12);
}

TEST(Entropy, Errors) {
  EXPECT_THROW(conditional_entropy(canonical::p3(), L{"A"}, L{"A", "B"}), InvalidArgument);
  EXPECT_THROW(mutual_information(canonical::p3(), L{"A"}, L{"Q"}), InvalidArgument);
  EXPECT_THROW(conditional_mutual_information(canonical::p3(), L{"A"}, L{"B"}, L{"B"}),
               InvalidArgument);
  EXPECT_THROW(relative_entropy(canonical::p3(), canonical::p2_ab()), InvalidArgument);
}

TEST(RelativeEntropy, SpecExamples) {
  const auto p = random_dist(1, 3, 3);
  EXPECT_NEAR(relative_entropy(p, p), 0.0, 1e-12);
  EXPECT_NEAR(relative_entropy(canonical::p3(), product_of_marginals(canonical::p3())), 2.0,
              1e-12);
  const std::vector<std::size_t> o{0, 0, 0};
  const PartySet ps({"A", "B", "C"}, {2, 2, 2});
  EXPECT_NEAR(relative_entropy(JointDistribution::point(ps, o), JointDistribution::uniform(ps)),
              3.0, 1e-12);
  EXPECT_TRUE(is_infinite_divergence(
      relative_entropy(JointDistribution::uniform(ps), JointDistribution::point(ps, o))));
}

TEST(Entropy, MatchesOracle) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_dist(seed, 1 + seed % 4, 4);
    const auto n = d.party_count();
    for (PartyMask m = 0; m < (PartyMask{1} << n); ++m) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < n; ++i) {
        if (has(m, i)) keep.push_back(i);
      }
      EXPECT_NEAR(shannon_entropy(d, m), oracle::entropy(d, keep), 1e-10);
    }
  }
}

TEST(Entropy, CacheAgreesWithDirect) {
  const auto d = random_dist(9, 4, 3);
  EntropyCache cache(d);
  for (PartyMask m = 0; m < 16; ++m) EXPECT_EQ(cache(m), shannon_entropy(d, m));
  EXPECT_EQ(cache.party_count(), 4u);
}

TEST(Properties, ChainRuleAndStrongSubadditivity) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto d = random_dist(seed + 5000, 3, 4);
    EXPECT_NEAR(shannon_entropy(d, 0b011),
                shannon_entropy(d, 0b001) + conditional_entropy(d, 0b010, 0b001), 1e-9);
    EXPECT_GE(conditional_mutual_information(d, 0b001, 0b010, 0b100), -1e-9);
    EXPECT_NEAR(conditional_mutual_information(d, 0b001, 0b010, 0),
                mutual_information(d, 0b001, 0b010), 1e-12);
  }
}

TEST(Properties, RelativeEntropyNonnegative) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = rnd::make_engine(seed);
    const auto ps = rnd::party_set(rng, 2, 2, 3);
    const auto p = rnd::distribution(rng, ps);
    const auto q = rnd::distribution(rng, ps);
    EXPECT_GE(relative_entropy(p, q), -1e-12);
    EXPECT_NEAR(relative_entropy(p, p), 0.0, 1e-12);
  }
}

TEST(ShannonBits, Basic) {
  const std::vector<double> fair{0.5, 0.5}, skew{1.0, 0.0};
  EXPECT_NEAR(shannon_bits(fair), 1.0, 1e-15);
  EXPECT_EQ(shannon_bits(skew), 0.0);
}
