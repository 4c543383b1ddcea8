#pragma once

// Shannon-entropy primitives. All quantities are in bits (log base 2),
// including the relative entropy.

#include <limits>
#include <span>
#include <string>
#include <unordered_map>

#include "secmon/distribution.hpp"

namespace secmon {

/// Bit-valued information quantity.
using Bits = double;

/// Returned by relative_entropy when supp(p) is not contained in supp(q).
inline constexpr Bits kInfiniteDivergence = std::numeric_limits<double>::infinity();
inline bool is_infinite_divergence(Bits b) noexcept { return b == kInfiniteDivergence; }

/// -sum p log2 p over a probability vector, 0 log 0 = 0, accumulated in index order.
Bits shannon_bits(std::span<const double> probabilities);

/// H of the marginal on `subset`; the empty mask has entropy 0.
Bits shannon_entropy(const JointDistribution& dist, PartyMask subset);
Bits shannon_entropy(const JointDistribution& dist, std::span<const std::string> subset);

/// H(X | given) = H(X given) - H(given).
Bits conditional_entropy(const JointDistribution& dist, PartyMask x, PartyMask given);
Bits conditional_entropy(const JointDistribution& dist, std::span<const std::string> x,
                         std::span<const std::string> given);

/// I(X:Y|Z) = H(XZ) + H(YZ) - H(Z) - H(XYZ); Z may be empty.
Bits conditional_mutual_information(const JointDistribution& dist, PartyMask x, PartyMask y,
                                    PartyMask z);
Bits conditional_mutual_information(const JointDistribution& dist,
                                    std::span<const std::string> x,
                                    std::span<const std::string> y,
                                    std::span<const std::string> z);
Bits mutual_information(const JointDistribution& dist, PartyMask x, PartyMask y);
Bits mutual_information(const JointDistribution& dist, std::span<const std::string> x,
                        std::span<const std::string> y);

/// D(p || q) in bits, or kInfiniteDivergence.
Bits relative_entropy(const JointDistribution& p, const JointDistribution& q);

/// Memoized subset entropies of one distribution. Not thread-safe; meant to
/// live on the stack of a single monotone evaluation.
class EntropyCache {
 public:
  explicit EntropyCache(const JointDistribution& dist) : dist_(dist) {}

  Bits operator()(PartyMask subset);
  std::size_t party_count() const noexcept { return dist_.party_count(); }

 private:
  const JointDistribution& dist_;
  std::unordered_map<PartyMask, Bits> memo_;
};

}  // namespace secmon
