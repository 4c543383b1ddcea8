#pragma once

// LOCC protocols over classical distributions: a list of local channels,
// randomizations and public announcements, executed branch by branch.

#include <cstddef>
#include <string>
#include <vector>

#include "secmon/distribution.hpp"
#include "secmon/monotones.hpp"

namespace secmon {

enum class StepKind { local_channel, announce, forget };

/// One protocol step by one party.
///
/// A step may depend on values already made public: `given` lists the indices
/// of earlier announce steps, and `channels` then holds one channel per
/// combination of those values (row-major, first listed step most
/// significant). Without `given`, `channels` holds exactly one channel. A
/// forget step carries no channel.
struct ProtocolStep {
  StepKind kind = StepKind::local_channel;
  std::string party;
  std::vector<std::size_t> given;
  std::vector<StochasticChannel> channels;
};

/// Deterministic per-party symbol map applied to terminal branches before they
/// are compared with a target distribution.
struct SymbolMap {
  std::string party;
  std::vector<std::size_t> map;
  std::size_t out = 1;
};

struct Protocol {
  std::string name;
  std::vector<ProtocolStep> steps;
  std::vector<SymbolMap> relabel;
};

/// Throws InvalidArgument (no steps) or ProtocolError (ill-formed step).
void validate(const Protocol& protocol);

/// Applies the steps in order. Announcements split every branch; branches stay
/// in lexicographic order of their transcripts. Arity problems raise
/// ProtocolError naming the step and branch.
ClassicalEnsemble run_protocol(const JointDistribution& initial, const Protocol& protocol);

/// px_to_p2, p3_to_p2, p3sq_to_px, pxsq_to_p3 over parties A, B, C.
std::vector<Protocol> builtin_protocols();
/// Throws InvalidArgument for an unknown name.
Protocol builtin_protocol(const std::string& name);

/// sum of weight * M(member).
Bits ensemble_monotone(const ClassicalEnsemble& ensemble, const Monotone& monotone);

JointDistribution relabel(const JointDistribution& dist, const std::vector<SymbolMap>& maps);

struct MatchReport {
  /// Largest total-variation distance over branches; 1 when shapes differ.
  double max_distance = 0;
  bool matches = false;
  std::vector<double> per_branch;
};

/// Compares every relabeled terminal branch with `target` (threshold 1e-12).
MatchReport match_target(const ClassicalEnsemble& terminal, const Protocol& protocol,
                         const JointDistribution& target);

std::string to_string(StepKind kind);
StepKind step_kind_from_string(const std::string& s);

}  // namespace secmon
