#pragma once

// JSON file formats for distributions, states, channels, protocols and
// verification reports. Malformed input raises ParseError; well-formed input
// that violates a type invariant raises the constructor's InvalidArgument.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "secmon/distribution.hpp"
#include "secmon/locc.hpp"
#include "secmon/quantum.hpp"
#include "secmon/verify.hpp"

namespace secmon::io {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file.
json read_json(const std::string& path);
/// Writes `value` pretty-printed with a trailing newline.
void write_json(const std::string& path, const json& value);

// {"parties":[...],"cardinalities":[...],"entries":[{"outcome":[...],"p":x},...]}
// Omitted outcomes have probability 0; duplicate outcomes are rejected.
JointDistribution distribution_from_json(const json& j);
/// Nonzero entries only, in outcome-index order.
json to_json(const JointDistribution& dist);
JointDistribution load_distribution(const std::string& path);

// {"in":n,"out":m,"kernel":[[...],...]} with kernel[a][b] = P(b|a).
StochasticChannel channel_from_json(const json& j);
json to_json(const StochasticChannel& ch);

/// Steps are {"kind","party"} plus either "channel" or, for conditioned
/// steps, "given" and "channels". Optional "relabel":[{"party","map","out"}].
Protocol protocol_from_json(const json& j);
json to_json(const Protocol& protocol);
Protocol load_protocol(const std::string& path);

/// A state file holds either "matrix" (density matrix) or "amplitudes".
struct LoadedState {
  DensityMatrix rho;
  std::optional<PureState> pure;
};

// {"parties":[...],"dims":[...],"matrix":[[[re,im],...],...]}
// {"parties":[...],"dims":[...],"amplitudes":[[re,im],...]}
LoadedState state_from_json(const json& j);
json to_json(const DensityMatrix& rho);
json to_json(const PureState& psi);
LoadedState load_state(const std::string& path);

json to_json(const verify::CheckReport& report);
json to_json(const std::vector<verify::CheckReport>& reports);

}  // namespace secmon::io
