#include "secmon/entropy.hpp"

#include <cmath>

#include "secmon/error.hpp"

namespace secmon {

namespace {

void require_disjoint(PartyMask a, PartyMask b) {
  if (a & b) throw InvalidArgument("party subsets must be disjoint");
}

}  // namespace

Bits shannon_bits(std::span<const double> probabilities) {
  Bits h = 0.0;
  for (auto p : probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

Bits shannon_entropy(const JointDistribution& dist, PartyMask subset) {
  if (subset & ~dist.parties().all()) throw InvalidArgument("subset names an unknown party");
  if (subset == 0) return 0.0;
  if (subset == dist.parties().all()) return shannon_bits(dist.table());
  return shannon_bits(marginalize(dist, subset).table());
}

Bits shannon_entropy(const JointDistribution& dist, std::span<const std::string> subset) {
  if (subset.empty()) throw InvalidArgument("entropy needs a nonempty subset");
  return shannon_entropy(dist, dist.parties().mask_of(subset));
}

Bits conditional_entropy(const JointDistribution& dist, PartyMask x, PartyMask given) {
  require_disjoint(x, given);
  return shannon_entropy(dist, x | given) - shannon_entropy(dist, given);
}

Bits conditional_entropy(const JointDistribution& dist, std::span<const std::string> x,
                         std::span<const std::string> given) {
  const auto& ps = dist.parties();
  return conditional_entropy(dist, ps.mask_of(x), ps.mask_of(given));
}

Bits conditional_mutual_information(const JointDistribution& dist, PartyMask x, PartyMask y,
                                    PartyMask z) {
  require_disjoint(x, y);
  require_disjoint(x, z);
  require_disjoint(y, z);
  return shannon_entropy(dist, x | z) + shannon_entropy(dist, y | z) -
         shannon_entropy(dist, z) - shannon_entropy(dist, x | y | z);
}

Bits conditional_mutual_information(const JointDistribution& dist,
                                    std::span<const std::string> x,
                                    std::span<const std::string> y,
                                    std::span<const std::string> z) {
  const auto& ps = dist.parties();
  return conditional_mutual_information(dist, ps.mask_of(x), ps.mask_of(y), ps.mask_of(z));
}

Bits mutual_information(const JointDistribution& dist, PartyMask x, PartyMask y) {
  return conditional_mutual_information(dist, x, y, 0);
}

Bits mutual_information(const JointDistribution& dist, std::span<const std::string> x,
                        std::span<const std::string> y) {
  const auto& ps = dist.parties();
  return mutual_information(dist, ps.mask_of(x), ps.mask_of(y));
}

Bits relative_entropy(const JointDistribution& p, const JointDistribution& q) {
  if (!(p.parties() == q.parties())) {
    throw InvalidArgument("relative entropy needs identical parties and alphabets");
  }
  Bits d = 0.0;
  for (std::size_t i = 0; i < p.table().size(); ++i) {
    const double a = p.table()[i];
    if (a <= 0.0) continue;
    const double b = q.table()[i];
    if (b <= 0.0) return kInfiniteDivergence;
    d += a * std::log2(a / b);
  }
  return d;
}

Bits EntropyCache::operator()(PartyMask subset) {
  if (auto it = memo_.find(subset); it != memo_.end()) return it->second;
  const auto h = shannon_entropy(dist_, subset);
  memo_.emplace(subset, h);
  return h;
}

}  // namespace secmon
