#pragma once

// The five extreme tripartite distributions over parties A, B, C.
//
// The pair distributions give the uninvolved party a single-symbol alphabet,
// so e.g. p2_ab() is "P2_AB with trivial C".

#include <string>
#include <vector>

#include "secmon/distribution.hpp"

namespace secmon::canonical {

/// Shared random bit between A and B.
JointDistribution p2_ab();
/// Shared random bit between B and C.
JointDistribution p2_bc();
/// Shared random bit between A and C.
JointDistribution p2_ac();
/// One random bit shared by A, B and C.
JointDistribution p3();
/// A, B independent uniform bits, C = A xor B.
JointDistribution px();

/// Independent uniform bits, one per label.
JointDistribution uniform_bits(const std::vector<std::string>& labels);

}  // namespace secmon::canonical
