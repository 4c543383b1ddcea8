#pragma once

// Classical secrecy monotones: S_n, T_n, their convex combinations, grouped
// bipartite S_2, the tripartite five-vector and Venn decomposition, yield
// bounds, and the Eve-conditioned extensions M_1 and M_down.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "secmon/distribution.hpp"
#include "secmon/entropy.hpp"

namespace secmon {

/// Equivalent ways of evaluating S_n; `definition` is the default.
enum class SnForm {
  definition,  // H(all) - sum H(A_i | rest)
  subsets,     // sum H(rest_i) - (n-1) H(all)
  chain,       // I(A_1 : rest) + sum of conditional mutual informations
  recurrence,  // merge the last two parties repeatedly
};

/// Equivalent ways of evaluating T_n.
enum class TnForm {
  definition,        // sum H(A_i) - H(all)
  chain,             // I(A_1:A_2) + sum I(A_1..A_i : A_{i+1})
  relative_entropy,  // D(P || product of marginals)
};

Bits s_n(const JointDistribution& dist, SnForm form = SnForm::definition);
Bits t_n(const JointDistribution& dist, TnForm form = TnForm::definition);

/// lambda * S_n + (1 - lambda) * T_n. A monotone only for lambda in [0, 1].
Bits m_lambda(const JointDistribution& dist, double lambda);

/// S_2 across a two-block partition (the mutual information between blocks).
Bits grouped_s2(const JointDistribution& dist,
                const std::vector<std::vector<std::string>>& bipartition);

/// sum_i I(A_i : all other parties); equals S_n + T_n.
Bits sum_of_single_cuts(const JointDistribution& dist);

struct FiveVector {
  Bits s2_a_bc = 0;
  Bits s2_b_ac = 0;
  Bits s2_c_ab = 0;
  Bits s3 = 0;
  Bits t3 = 0;

  std::array<Bits, 5> values() const { return {s2_a_bc, s2_b_ac, s2_c_ab, s3, t3}; }
};

/// The five tripartite monotones, in the order S2(A:BC), S2(B:AC), S2(C:AB), S3, T3.
FiveVector five_vector(const JointDistribution& dist);

/// r = I(A:B|C), s = I(B:C|A), t = I(C:A|B), u = I(A:B) - I(A:B|C).
struct VennQuantities {
  Bits r = 0;
  Bits s = 0;
  Bits t = 0;
  Bits u = 0;

  /// r, s, t, r+u, s+u, t+u all >= -tolerance.
  bool positivity_holds(double tolerance) const;
};

VennQuantities venn(const JointDistribution& dist);

/// Yields of P2_AB, P2_BC, P2_AC, P^x and P^3 that reproduce a tripartite
/// distribution's five monotones.
struct CanonicalYields {
  Bits y1 = 0;  // P2_AB
  Bits y2 = 0;  // P2_BC
  Bits y3 = 0;  // P2_AC
  Bits y4 = 0;  // P^x
  Bits y5 = 0;  // P^3
  bool feasible = false;

  std::array<Bits, 5> values() const { return {y1, y2, y3, y4, y5}; }
};

CanonicalYields canonical_decomposition(const JointDistribution& dist);

/// Five-vector of the product of canonical distributions with the given
/// yields, by additivity over the rows of the canonical table.
FiveVector five_vector_of_yields(const CanonicalYields& yields);

/// A named real-valued function of a distribution.
struct Monotone {
  std::string name;
  std::function<Bits(const JointDistribution&)> eval;
};

Monotone s_n_monotone();
Monotone t_n_monotone();
Monotone m_lambda_monotone(double lambda);
/// S_2(block : everyone else).
Monotone grouped_s2_monotone(std::vector<std::string> block);

/// S_n, T_n and S_2(A_i : rest) for every party of `parties` (one cut for two parties).
std::vector<Monotone> default_monotones(const PartySet& parties);

struct YieldBound {
  double ratio = 0;
  std::string limiting;
  /// (monotone name, M(source) / M(target)) for every monotone not skipped.
  std::vector<std::pair<std::string, double>> ratios;
};

/// min over monotones positive on the target of M(source) / M(target).
/// An empty `monotones` selects default_monotones(target.parties()).
YieldBound yield_bound(const JointDistribution& source, const JointDistribution& target,
                       std::vector<Monotone> monotones = {});

/// M_1: sum_e P(e) M(P_{rest | E=e}).
Bits eve_average(const JointDistribution& dist, const std::string& eve, const Monotone& base);

struct EveSearchOptions {
  /// Enumerate every deterministic map E -> E' with |E'| <= |E| (only when |E| <= 6).
  bool exhaustive = true;
  /// Additional random stochastic Eve channels.
  std::size_t random_samples = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxExhaustiveEve = 6;

struct EveMinResult {
  Bits value = 0;
  /// Always true: the search result bounds the true minimum from above.
  bool upper_bound = true;
  bool exhaustive = false;
  std::size_t candidates = 0;
  StochasticChannel best_channel = StochasticChannel::identity(1);
};

/// M_down: minimum of M_1 over Eve pre-processing channels, by search.
EveMinResult eve_min(const JointDistribution& dist, const std::string& eve, const Monotone& base,
                     const EveSearchOptions& options = {});

}  // namespace secmon
