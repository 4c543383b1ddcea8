#pragma once

// Multipartite classical probability distributions and the local operations
// and public announcements that act on them.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "secmon/party_set.hpp"

namespace secmon {

/// Dense joint probability table over labeled parties, row-major in party
/// order. Immutable once constructed.
class JointDistribution {
 public:
  /// Validates entries >= 0 and sum within 1e-12 of 1. Never renormalizes.
  JointDistribution(PartySet parties, std::vector<double> table);

  /// For tables produced by library operations: sum must be within 1e-9,
  /// otherwise InternalError.
  static JointDistribution computed(PartySet parties, std::vector<double> table);

  /// Point mass on `outcome`.
  static JointDistribution point(PartySet parties, std::span<const std::size_t> outcome);
  static JointDistribution uniform(PartySet parties);

  const PartySet& parties() const noexcept { return parties_; }
  const std::vector<double>& table() const noexcept { return table_; }
  std::size_t party_count() const noexcept { return parties_.size(); }

  std::size_t index_of(std::span<const std::size_t> outcome) const;
  std::vector<std::size_t> outcome_of(std::size_t index) const;
  double probability(std::span<const std::size_t> outcome) const;

 private:
  struct Unchecked {};
  JointDistribution(Unchecked, PartySet parties, std::vector<double> table);

  PartySet parties_;
  std::vector<double> table_;
};

/// Conditional probability table P(out | in), kernel row-major [in][out].
class StochasticChannel {
 public:
  StochasticChannel(std::size_t in_cardinality, std::size_t out_cardinality,
                    std::vector<double> kernel);

  static StochasticChannel identity(std::size_t n);
  /// Every input mapped to the uniform distribution on n symbols.
  static StochasticChannel randomize(std::size_t n);
  /// Every input mapped to the single output symbol 0.
  static StochasticChannel constant(std::size_t n);
  /// out = map[in].
  static StochasticChannel deterministic(std::span<const std::size_t> map,
                                         std::size_t out_cardinality);
  /// Binary symmetric channel.
  static StochasticChannel binary_symmetric(double flip);

  std::size_t in_cardinality() const noexcept { return in_; }
  std::size_t out_cardinality() const noexcept { return out_; }
  const std::vector<double>& kernel() const noexcept { return kernel_; }
  double operator()(std::size_t in, std::size_t out) const { return kernel_[in * out_ + out]; }

  /// Apply `this`, then `next`.
  StochasticChannel then(const StochasticChannel& next) const;

 private:
  std::size_t in_;
  std::size_t out_;
  std::vector<double> kernel_;
};

/// One branch of an ensemble. `transcript` holds the public values announced
/// on the way to this branch, oldest first.
struct EnsembleMember {
  double weight;
  JointDistribution dist;
  std::vector<std::size_t> transcript;
};

/// Probability-weighted family of distributions over one PartySet.
class ClassicalEnsemble {
 public:
  /// Drops zero-weight members; weights must sum to 1 within 1e-12.
  explicit ClassicalEnsemble(std::vector<EnsembleMember> members);
  static ClassicalEnsemble single(JointDistribution dist);

  const std::vector<EnsembleMember>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  const PartySet& parties() const { return members_.front().dist.parties(); }

  /// The weighted mixture of all members (forgets the branch labels).
  JointDistribution mixture() const;

 private:
  std::vector<EnsembleMember> members_;
};

/// Marginal on `keep` (original relative order).
JointDistribution marginalize(const JointDistribution& dist, std::span<const std::string> keep);
JointDistribution marginalize(const JointDistribution& dist, PartyMask keep);

/// Party's variable passed through `ch`; its cardinality becomes ch's output size.
JointDistribution apply_channel(const JointDistribution& dist, const std::string& party,
                                const StochasticChannel& ch);

/// Randomize the party's variable in place (uniform over the same alphabet).
JointDistribution forget(const JointDistribution& dist, const std::string& party);

/// Party publicly discloses ch(A_j). One member per announced value with
/// nonzero probability, ascending; the announcer keeps its variable.
ClassicalEnsemble announce(const JointDistribution& dist, const std::string& party,
                           const StochasticChannel& ch);

/// Each block becomes one party (labels concatenated) whose alphabet is the
/// product of the block alphabets, row-major in original party order.
JointDistribution group(const JointDistribution& dist,
                        const std::vector<std::vector<std::string>>& partition);

/// Independent draws held by the same parties: each party's symbol becomes
/// the pair (s1, s2) encoded as s1 * |alphabet2| + s2.
JointDistribution tensor(const JointDistribution& d1, const JointDistribution& d2);

/// Product of the single-party marginals.
JointDistribution product_of_marginals(const JointDistribution& dist);

/// Reorder parties; `order[k]` is the old index of the new k-th party.
JointDistribution permute(const JointDistribution& dist, std::span<const std::size_t> order);

/// Sum |p - q| / 2. Throws InvalidArgument on PartySet mismatch.
double total_variation(const JointDistribution& p, const JointDistribution& q);

}  // namespace secmon
