#include "secmon/locc.hpp"

#include <algorithm>

#include "secmon/error.hpp"
#include "secmon/parallel.hpp"
#include "secmon/tolerance.hpp"

namespace secmon {

namespace {

struct StepPlan {
  // Transcript position of each given announcement.
  std::vector<std::size_t> positions;
  // Out cardinality of each given announcement.
  std::vector<std::size_t> radices;
};

std::vector<StepPlan> plan(const Protocol& p) {
  std::vector<StepPlan> plans(p.steps.size());
  std::vector<std::size_t> position(p.steps.size(), 0);
  std::size_t announced = 0;
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const auto& step = p.steps[k];
    if (step.party.empty()) throw ProtocolError(k, 0, "step names no party");
    std::size_t combos = 1;
    for (auto g : step.given) {
      if (g >= k || p.steps[g].kind != StepKind::announce) {
        throw ProtocolError(k, 0, "'given' must reference an earlier announce step");
      }
      plans[k].positions.push_back(position[g]);
      const auto radix = p.steps[g].channels.front().out_cardinality();
      plans[k].radices.push_back(radix);
      combos *= radix;
    }
    if (step.kind == StepKind::forget) {
      if (!step.channels.empty() || !step.given.empty()) {
        throw ProtocolError(k, 0, "forget steps take no channel");
      }
    } else {
      if (step.channels.size() != combos) {
        throw ProtocolError(k, 0, "expected " + std::to_string(combos) + " channel(s), got " +
                                      std::to_string(step.channels.size()));
      }
      if (step.kind == StepKind::announce) {
        const auto out = step.channels.front().out_cardinality();
        for (const auto& ch : step.channels) {
          if (ch.out_cardinality() != out) {
            throw ProtocolError(k, 0, "conditioned announcement channels disagree on alphabet");
          }
        }
      }
    }
    if (step.kind == StepKind::announce) position[k] = announced++;
  }
  return plans;
}

const StochasticChannel& select(const ProtocolStep& step, const StepPlan& plan,
                                const std::vector<std::size_t>& transcript) {
  std::size_t index = 0;
  for (std::size_t g = 0; g < plan.positions.size(); ++g) {
    index = index * plan.radices[g] + transcript[plan.positions[g]];
  }
  return step.channels[index];
}

std::vector<EnsembleMember> apply_step(const EnsembleMember& member, const ProtocolStep& step,
                                       const StepPlan& plan, std::size_t k, std::size_t branch) {
  const auto& ps = member.dist.parties();
  if (!ps.contains(step.party)) {
    throw ProtocolError(k, branch, "unknown party '" + step.party + "'");
  }
  const auto card = ps.cardinality(ps.index_of(step.party));
  std::vector<EnsembleMember> out;
  if (step.kind == StepKind::forget) {
    out.push_back({member.weight, forget(member.dist, step.party), member.transcript});
    return out;
  }
  const auto& ch = select(step, plan, member.transcript);
  if (ch.in_cardinality() != card) {
    throw ProtocolError(k, branch,
                        "channel expects " + std::to_string(ch.in_cardinality()) +
                            " input symbols but party '" + step.party + "' has " +
                            std::to_string(card));
  }
  if (step.kind == StepKind::local_channel) {
    out.push_back({member.weight, apply_channel(member.dist, step.party, ch), member.transcript});
    return out;
  }
  const auto ens = announce(member.dist, step.party, ch);
  for (const auto& sub : ens.members()) {
    auto transcript = member.transcript;
    transcript.push_back(sub.transcript.front());
    out.push_back({member.weight * sub.weight, sub.dist, std::move(transcript)});
  }
  return out;
}

StochasticChannel flip_bit() { return StochasticChannel(2, 2, {0, 1, 1, 0}); }

StochasticChannel map(std::vector<std::size_t> m, std::size_t out) {
  return StochasticChannel::deterministic(m, out);
}

}  // namespace

void validate(const Protocol& protocol) {
  if (protocol.steps.empty()) throw InvalidArgument("protocol has no steps");
  plan(protocol);
}

ClassicalEnsemble run_protocol(const JointDistribution& initial, const Protocol& protocol) {
  if (protocol.steps.empty()) throw InvalidArgument("protocol has no steps");
  const auto plans = plan(protocol);
  std::vector<EnsembleMember> branches{{1.0, initial, {}}};
  for (std::size_t k = 0; k < protocol.steps.size(); ++k) {
    std::vector<std::vector<EnsembleMember>> next(branches.size());
    parallel_for(branches.size(), [&](std::size_t b) {
      next[b] = apply_step(branches[b], protocol.steps[k], plans[k], k, b);
    });
    branches.clear();
    for (auto& group : next) {
      for (auto& m : group) branches.push_back(std::move(m));
    }
  }
  return ClassicalEnsemble(std::move(branches));
}

std::vector<Protocol> builtin_protocols() {
  std::vector<Protocol> out;

  // C publishes its bit; B undoes the parity so that A = B. C's public value
  // is then merged into a single symbol.
  out.push_back({"px_to_p2",
                 {{StepKind::announce, "C", {}, {StochasticChannel::identity(2)}},
                  {StepKind::local_channel, "B", {0}, {StochasticChannel::identity(2), flip_bit()}}},
                 {{"C", {0, 0}, 1}}});

  // C randomizes its bit; its now independent variable is merged away.
  out.push_back({"p3_to_p2", {{StepKind::forget, "C", {}, {}}}, {{"C", {0, 0}, 1}}});

  // Symbols of the squared inputs are (first copy, second copy) = 2 * b1 + b2.
  // A keeps the second bit, B the first, C their sum.
  out.push_back({"p3sq_to_px",
                 {{StepKind::local_channel, "A", {}, {map({0, 1, 0, 1}, 2)}},
                  {StepKind::local_channel, "B", {}, {map({0, 0, 1, 1}, 2)}},
                  {StepKind::local_channel, "C", {}, {map({0, 1, 1, 0}, 2)}}},
                 {}});

  // A holds (x, x'), B holds (y, y'), C holds (x+y, x'+y'). A publishes x, B
  // publishes y', C publishes y+x'; everyone then computes y.
  Protocol pxsq{"pxsq_to_p3", {}, {}};
  pxsq.steps.push_back({StepKind::announce, "A", {}, {map({0, 0, 1, 1}, 2)}});
  pxsq.steps.push_back({StepKind::announce, "B", {}, {map({0, 1, 0, 1}, 2)}});
  ProtocolStep c_says{StepKind::announce, "C", {0, 1}, {}};
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y2 = 0; y2 < 2; ++y2) {
      std::vector<std::size_t> m(4);
      for (std::size_t c = 0; c < 4; ++c) m[c] = ((c >> 1) ^ x) ^ ((c & 1) ^ y2);
      c_says.channels.push_back(map(m, 2));
    }
  }
  pxsq.steps.push_back(std::move(c_says));
  ProtocolStep a_learns{StepKind::local_channel, "A", {2}, {}};
  for (std::size_t v = 0; v < 2; ++v) {
    std::vector<std::size_t> m(4);
    for (std::size_t a = 0; a < 4; ++a) m[a] = (a & 1) ^ v;
    a_learns.channels.push_back(map(m, 2));
  }
  pxsq.steps.push_back(std::move(a_learns));
  pxsq.steps.push_back({StepKind::local_channel, "B", {}, {map({0, 0, 1, 1}, 2)}});
  ProtocolStep c_learns{StepKind::local_channel, "C", {0}, {}};
  for (std::size_t x = 0; x < 2; ++x) {
    std::vector<std::size_t> m(4);
    for (std::size_t c = 0; c < 4; ++c) m[c] = (c >> 1) ^ x;
    c_learns.channels.push_back(map(m, 2));
  }
  pxsq.steps.push_back(std::move(c_learns));
  out.push_back(std::move(pxsq));

  return out;
}

Protocol builtin_protocol(const std::string& name) {
  for (auto& p : builtin_protocols()) {
    if (p.name == name) return p;
  }
  throw InvalidArgument("unknown builtin protocol '" + name + "'");
}

Bits ensemble_monotone(const ClassicalEnsemble& ensemble, const Monotone& monotone) {
  Bits acc = 0.0;
  for (const auto& m : ensemble.members()) acc += m.weight * monotone.eval(m.dist);
  return acc;
}

JointDistribution relabel(const JointDistribution& dist, const std::vector<SymbolMap>& maps) {
  auto out = dist;
  for (const auto& m : maps) {
    out = apply_channel(out, m.party, StochasticChannel::deterministic(m.map, m.out));
  }
  return out;
}

MatchReport match_target(const ClassicalEnsemble& terminal, const Protocol& protocol,
                         const JointDistribution& target) {
  MatchReport r;
  for (const auto& m : terminal.members()) {
    double d = 1.0;
    try {
      const auto mapped = relabel(m.dist, protocol.relabel);
      if (mapped.parties() == target.parties()) d = total_variation(mapped, target);
    } catch (const InvalidArgument&) {
      // Relabeling does not fit this branch's alphabets: no match.
    }
    r.per_branch.push_back(d);
    r.max_distance = std::max(r.max_distance, d);
  }
  r.matches = r.max_distance < tol::kMatch;
  return r;
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::local_channel:
      return "local_channel";
    case StepKind::announce:
      return "announce";
    case StepKind::forget:
      return "forget";
  }
  return "?";
}

StepKind step_kind_from_string(const std::string& s) {
  if (s == "local_channel") return StepKind::local_channel;
  if (s == "announce") return StepKind::announce;
  if (s == "forget") return StepKind::forget;
  throw ParseError("unknown step kind '" + s + "'");
}

}  // namespace secmon
