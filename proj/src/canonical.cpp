#include "secmon/canonical.hpp"

namespace secmon::canonical {

namespace {

PartySet abc(std::size_t a, std::size_t b, std::size_t c) {
  return PartySet({"A", "B", "C"}, {a, b, c});
}

}  // namespace

JointDistribution p2_ab() { return JointDistribution(abc(2, 2, 1), {0.5, 0.0, 0.0, 0.5}); }

JointDistribution p2_bc() { return JointDistribution(abc(1, 2, 2), {0.5, 0.0, 0.0, 0.5}); }

JointDistribution p2_ac() { return JointDistribution(abc(2, 1, 2), {0.5, 0.0, 0.0, 0.5}); }

JointDistribution p3() {
  return JointDistribution(abc(2, 2, 2), {0.5, 0, 0, 0, 0, 0, 0, 0.5});
}

JointDistribution px() {
  // Outcomes 000, 011, 101, 110.
  return JointDistribution(abc(2, 2, 2), {0.25, 0, 0, 0.25, 0, 0.25, 0.25, 0});
}

JointDistribution uniform_bits(const std::vector<std::string>& labels) {
  return JointDistribution::uniform(PartySet(labels, std::vector<std::size_t>(labels.size(), 2)));
}

}  // namespace secmon::canonical
