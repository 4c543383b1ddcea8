#include <gtest/gtest.h>

#include "secmon/canonical.hpp"
#include "secmon/error.hpp"
#include "secmon/locc.hpp"
#include "secmon/random.hpp"

using namespace secmon;

namespace {

struct Golden {
  std::string protocol;
  JointDistribution source;
  JointDistribution target;
  bool use_s;  // which monotone the protocol is quoted for
  double before;
  double after;
};

std::vector<Golden> goldens() {
  const auto p3 = canonical::p3();
  const auto px = canonical::px();
  return {{"p3_to_p2", p3, canonical::p2_ab(), false, 2, 1},
          {"px_to_p2", px, canonical::p2_ab(), true, 2, 1},
          {"p3sq_to_px", tensor(p3, p3), px, false, 4, 1},
          {"pxsq_to_p3", tensor(px, px), p3, true, 4, 1}};
}

double weight_sum(const ClassicalEnsemble& e) {
  double w = 0.0;
  for (const auto& m : e.members()) w += m.weight;
  return w;
}

}  // namespace

TEST(Builtins, NamesAndValidity) {
  const auto all = builtin_protocols();
  ASSERT_EQ(all.size(), 4u);
  for (const auto& p : all) {
    EXPECT_NO_THROW(validate(p)) << p.name;
    EXPECT_EQ(builtin_protocol(p.name).name, p.name);
  }
  EXPECT_THROW(builtin_protocol("nope"), InvalidArgument);
}

TEST(Builtins, GoldenRuns) {
  for (const auto& g : goldens()) {
    const auto proto = builtin_protocol(g.protocol);
    const auto mono = g.use_s ? s_n_monotone() : t_n_monotone();
    EXPECT_NEAR(mono.eval(g.source), g.before, 1e-9) << g.protocol;
    const auto end = run_protocol(g.source, proto);
    EXPECT_NEAR(weight_sum(end), 1.0, 1e-12);
    const auto match = match_target(end, proto, g.target);
    EXPECT_TRUE(match.matches) << g.protocol;
    EXPECT_LT(match.max_distance, 1e-12) << g.protocol;
    EXPECT_EQ(match.per_branch.size(), end.size());
    for (const auto& m : end.members()) {
      EXPECT_NEAR(mono.eval(relabel(m.dist, proto.relabel)), g.after, 1e-9) << g.protocol;
    }
  }
}

TEST(Builtins, MismatchedTargetIsReported) {
  const auto proto = builtin_protocol("px_to_p2");
  const auto end = run_protocol(canonical::p3(), proto);
  const auto match = match_target(end, proto, canonical::p2_ab());
  EXPECT_FALSE(match.matches);
  EXPECT_GT(match.max_distance, 1e-3);
}

TEST(Builtins, IncompatibleShapeRaisesProtocolError) {
  const auto sq = tensor(canonical::px(), canonical::px());
  EXPECT_THROW(run_protocol(sq, builtin_protocol("px_to_p2")), ProtocolError);
}

TEST(RunProtocol, TrivialCases) {
  const auto p = canonical::px();
  Protocol empty{"empty", {}, {}};
  EXPECT_THROW(run_protocol(p, empty), InvalidArgument);
  Protocol id{"id", {{StepKind::local_channel, "A", {}, {StochasticChannel::identity(2)}}}, {}};
  const auto e = run_protocol(p, id);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.members()[0].dist.table(), p.table());
}

TEST(RunProtocol, AnnounceThenS3) {
  Protocol say{"say", {{StepKind::announce, "C", {}, {StochasticChannel::identity(2)}}}, {}};
  const auto e = run_protocol(canonical::px(), say);
  EXPECT_EQ(e.size(), 2u);
  EXPECT_NEAR(ensemble_monotone(e, s_n_monotone()), 1.0, 1e-12);

  Protocol tell{"tell", {{StepKind::announce, "A", {}, {StochasticChannel::identity(2)}}}, {}};
  EXPECT_NEAR(ensemble_monotone(run_protocol(canonical::p3(), tell), s_n_monotone()), 0.0, 1e-12);
  EXPECT_NEAR(ensemble_monotone(ClassicalEnsemble::single(canonical::px()), t_n_monotone()), 1.0,
              1e-12);
}

TEST(RunProtocol, ValidationErrors) {
  Protocol bad_given{
      "g", {{StepKind::local_channel, "A", {0}, {StochasticChannel::identity(2)}}}, {}};
  EXPECT_THROW(validate(bad_given), ProtocolError);
  Protocol wrong_count{"w",
                       {{StepKind::announce, "A", {}, {StochasticChannel::identity(2)}},
                        {StepKind::local_channel, "B", {0}, {StochasticChannel::identity(2)}}},
                       {}};
  EXPECT_THROW(validate(wrong_count), ProtocolError);
  Protocol unknown{"u", {{StepKind::forget, "Q", {}, {}}}, {}};
  EXPECT_THROW(run_protocol(canonical::p3(), unknown), Error);
}

TEST(Properties, RandomStepsNeverIncreaseMonotones) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto rng = rnd::make_engine(seed);
    const auto d = rnd::distribution(rng, rnd::party_set(rng, 3, 2, 3));
    const auto party = d.parties().label(rnd::uniform_index(rng, 0, 2));
    const auto card = d.parties().cardinality(d.parties().index_of(party));
    const auto ch = rnd::channel(rng, card, rnd::uniform_index(rng, 1, 3));
    const auto kind = seed % 2 ? StepKind::announce : StepKind::local_channel;
    Protocol p{"r", {{kind, party, {}, {ch}}}, {}};
    const auto e = run_protocol(d, p);
    EXPECT_NEAR(weight_sum(e), 1.0, 1e-12);
    EXPECT_LE(ensemble_monotone(e, s_n_monotone()), s_n(d) + 1e-9) << seed;
    EXPECT_LE(ensemble_monotone(e, t_n_monotone()), t_n(d) + 1e-9) << seed;
  }
}

TEST(Properties, LambdaOutsideUnitIntervalIncreases) {
  const auto up_s = run_protocol(canonical::px(), builtin_protocol("px_to_p2"));
  const auto low = m_lambda_monotone(-0.1);
  EXPECT_GT(ensemble_monotone(up_s, low), low.eval(canonical::px()) + 1e-6);

  const auto up_t = run_protocol(canonical::p3(), builtin_protocol("p3_to_p2"));
  const auto high = m_lambda_monotone(1.1);
  EXPECT_GT(ensemble_monotone(up_t, high), high.eval(canonical::p3()) + 1e-6);

  for (double lambda : {0.0, 0.25, 0.5, 1.0}) {
    const auto m = m_lambda_monotone(lambda);
    EXPECT_LE(ensemble_monotone(up_s, m), m.eval(canonical::px()) + 1e-9);
    EXPECT_LE(ensemble_monotone(up_t, m), m.eval(canonical::p3()) + 1e-9);
  }
}

TEST(StepKind, StringRoundTrip) {
  for (auto k : {StepKind::local_channel, StepKind::announce, StepKind::forget}) {
    EXPECT_EQ(step_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(step_kind_from_string("teleport"), Error);
}
