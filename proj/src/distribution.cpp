#include "secmon/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "secmon/error.hpp"
#include "secmon/kernels.hpp"
#include "secmon/tolerance.hpp"

namespace secmon {

namespace {

double checked_sum(std::span<const double> table) {
  double sum = 0.0;
  for (auto p : table) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw InvalidArgument("probability entries must be finite and >= 0");
    }
    sum += p;
  }
  return sum;
}

std::vector<std::size_t> decode(std::size_t index, std::span<const std::size_t> cards) {
  std::vector<std::size_t> out(cards.size());
  for (std::size_t k = cards.size(); k-- > 0;) {
    out[k] = index % cards[k];
    index /= cards[k];
  }
  return out;
}

std::size_t encode(std::span<const std::size_t> coords, std::span<const std::size_t> cards) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < cards.size(); ++k) index = index * cards[k] + coords[k];
  return index;
}

}  // namespace

// --- JointDistribution -------------------------------------------------------

JointDistribution::JointDistribution(PartySet parties, std::vector<double> table)
    : parties_(std::move(parties)), table_(std::move(table)) {
  if (table_.size() != parties_.total()) {
    throw InvalidArgument("table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(parties_.total()));
  }
  const double sum = checked_sum(table_);
  if (std::abs(sum - 1.0) > tol::kInputProbability) {
    throw InvalidArgument("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
}

JointDistribution::JointDistribution(Unchecked, PartySet parties, std::vector<double> table)
    : parties_(std::move(parties)), table_(std::move(table)) {}

JointDistribution JointDistribution::computed(PartySet parties, std::vector<double> table) {
  if (table.size() != parties.total()) {
    throw InternalError("computed table has the wrong size");
  }
  double sum = 0.0;
  for (auto& p : table) {
    if (!(p >= 0.0)) {
      if (p < -tol::kComputedProbability || std::isnan(p)) {
        throw InternalError("computed table has a negative entry");
      }
      p = 0.0;
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol::kComputedProbability) {
    throw InternalError("computed table sums to " + std::to_string(sum));
  }
  return JointDistribution(Unchecked{}, std::move(parties), std::move(table));
}

JointDistribution JointDistribution::point(PartySet parties,
                                           std::span<const std::size_t> outcome) {
  std::vector<double> t(parties.total(), 0.0);
  if (outcome.size() != parties.size()) throw InvalidArgument("outcome arity mismatch");
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i] >= parties.cardinality(i)) throw InvalidArgument("outcome out of range");
  }
  t[encode(outcome, parties.cardinalities())] = 1.0;
  return JointDistribution(std::move(parties), std::move(t));
}

JointDistribution JointDistribution::uniform(PartySet parties) {
  const auto n = parties.total();
  return computed(std::move(parties), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

std::size_t JointDistribution::index_of(std::span<const std::size_t> outcome) const {
  if (outcome.size() != parties_.size()) throw InvalidArgument("outcome arity mismatch");
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i] >= parties_.cardinality(i)) throw InvalidArgument("outcome out of range");
  }
  return encode(outcome, parties_.cardinalities());
}

std::vector<std::size_t> JointDistribution::outcome_of(std::size_t index) const {
  return decode(index, parties_.cardinalities());
}

double JointDistribution::probability(std::span<const std::size_t> outcome) const {
  return table_[index_of(outcome)];
}

// --- StochasticChannel -------------------------------------------------------

StochasticChannel::StochasticChannel(std::size_t in_cardinality, std::size_t out_cardinality,
                                     std::vector<double> kernel)
    : in_(in_cardinality), out_(out_cardinality), kernel_(std::move(kernel)) {
  if (in_ == 0 || out_ == 0) throw InvalidArgument("channel cardinalities must be >= 1");
  if (kernel_.size() != in_ * out_) throw InvalidArgument("channel kernel has the wrong size");
  for (std::size_t a = 0; a < in_; ++a) {
    const double row = checked_sum(std::span(kernel_).subspan(a * out_, out_));
    if (std::abs(row - 1.0) > tol::kInputProbability) {
      throw InvalidArgument("channel row " + std::to_string(a) + " sums to " +
                            std::to_string(row));
    }
  }
}

StochasticChannel StochasticChannel::identity(std::size_t n) {
  std::vector<double> k(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) k[a * n + a] = 1.0;
  return {n, n, std::move(k)};
}

StochasticChannel StochasticChannel::randomize(std::size_t n) {
  return {n, n, std::vector<double>(n * n, 1.0 / static_cast<double>(n))};
}

StochasticChannel StochasticChannel::constant(std::size_t n) {
  return {n, 1, std::vector<double>(n, 1.0)};
}

StochasticChannel StochasticChannel::deterministic(std::span<const std::size_t> map,
                                                   std::size_t out_cardinality) {
  std::vector<double> k(map.size() * out_cardinality, 0.0);
  for (std::size_t a = 0; a < map.size(); ++a) {
    if (map[a] >= out_cardinality) throw InvalidArgument("deterministic map out of range");
    k[a * out_cardinality + map[a]] = 1.0;
  }
  return {map.size(), out_cardinality, std::move(k)};
}

StochasticChannel StochasticChannel::binary_symmetric(double flip) {
  if (!(flip >= 0.0 && flip <= 1.0)) throw InvalidArgument("flip probability outside [0,1]");
  return {2, 2, {1.0 - flip, flip, flip, 1.0 - flip}};
}

StochasticChannel StochasticChannel::then(const StochasticChannel& next) const {
  if (next.in_ != out_) throw InvalidArgument("channel composition arity mismatch");
  std::vector<double> k(in_ * next.out_, 0.0);
  for (std::size_t a = 0; a < in_; ++a) {
    for (std::size_t m = 0; m < out_; ++m) {
      for (std::size_t b = 0; b < next.out_; ++b) {
        k[a * next.out_ + b] += (*this)(a, m) * next(m, b);
      }
    }
  }
  return {in_, next.out_, std::move(k)};
}

// --- ClassicalEnsemble -------------------------------------------------------

ClassicalEnsemble::ClassicalEnsemble(std::vector<EnsembleMember> members) {
  double sum = 0.0;
  for (auto& m : members) {
    if (!(m.weight >= 0.0)) throw InvalidArgument("ensemble weight must be >= 0");
    if (m.weight == 0.0) continue;
    if (!members_.empty() && !(m.dist.parties() == members_.front().dist.parties())) {
      throw InvalidArgument("ensemble members must share one PartySet");
    }
    sum += m.weight;
    members_.push_back(std::move(m));
  }
  if (members_.empty()) throw InvalidArgument("ensemble has no member with positive weight");
  if (std::abs(sum - 1.0) > tol::kInputProbability) {
    throw InvalidArgument("ensemble weights sum to " + std::to_string(sum));
  }
}

ClassicalEnsemble ClassicalEnsemble::single(JointDistribution dist) {
  std::vector<EnsembleMember> m;
  m.push_back({1.0, std::move(dist), {}});
  return ClassicalEnsemble(std::move(m));
}

JointDistribution ClassicalEnsemble::mixture() const {
  std::vector<double> t(parties().total(), 0.0);
  for (const auto& m : members_) {
    for (std::size_t i = 0; i < t.size(); ++i) t[i] += m.weight * m.dist.table()[i];
  }
  return JointDistribution::computed(parties(), std::move(t));
}

// --- operations --------------------------------------------------------------

JointDistribution marginalize(const JointDistribution& dist, PartyMask keep) {
  const auto& ps = dist.parties();
  keep &= ps.all();
  if (keep == 0) throw InvalidArgument("marginal needs a nonempty set of parties");
  if (keep == ps.all()) return dist;
  auto t = kernels::marginalize(dist.table(), ps.cardinalities(), keep);
  return JointDistribution::computed(ps.restrict_to(keep), std::move(t));
}

JointDistribution marginalize(const JointDistribution& dist, std::span<const std::string> keep) {
  if (keep.empty()) throw InvalidArgument("marginal needs a nonempty set of parties");
  return marginalize(dist, dist.parties().mask_of(keep));
}

JointDistribution apply_channel(const JointDistribution& dist, const std::string& party,
                                const StochasticChannel& ch) {
  const auto& ps = dist.parties();
  const auto j = ps.index_of(party);
  if (ch.in_cardinality() != ps.cardinality(j)) {
    throw InvalidArgument("channel expects " + std::to_string(ch.in_cardinality()) +
                          " input symbols but party '" + party + "' has " +
                          std::to_string(ps.cardinality(j)));
  }
  auto out_ps = ps.with_cardinality(j, ch.out_cardinality());
  auto t = kernels::apply_axis_kernel(dist.table(), ps.cardinalities(), j, ch.kernel(),
                                      ch.out_cardinality());
  return JointDistribution::computed(std::move(out_ps), std::move(t));
}

JointDistribution forget(const JointDistribution& dist, const std::string& party) {
  const auto j = dist.parties().index_of(party);
  return apply_channel(dist, party, StochasticChannel::randomize(dist.parties().cardinality(j)));
}

ClassicalEnsemble announce(const JointDistribution& dist, const std::string& party,
                           const StochasticChannel& ch) {
  const auto& ps = dist.parties();
  const auto j = ps.index_of(party);
  if (ch.in_cardinality() != ps.cardinality(j)) {
    throw InvalidArgument("announcement channel expects " +
                          std::to_string(ch.in_cardinality()) + " input symbols but party '" +
                          party + "' has " + std::to_string(ps.cardinality(j)));
  }
  const auto stride = ps.strides()[j];
  const auto card = ps.cardinality(j);
  const auto& p = dist.table();

  std::vector<EnsembleMember> members;
  for (std::size_t said = 0; said < ch.out_cardinality(); ++said) {
    std::vector<double> t(p.size());
    double weight = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      t[i] = ch((i / stride) % card, said) * p[i];
      weight += t[i];
    }
    if (weight <= 0.0) continue;
    for (auto& v : t) v /= weight;
    members.push_back({weight, JointDistribution::computed(ps, std::move(t)), {said}});
  }
  return ClassicalEnsemble(std::move(members));
}

JointDistribution group(const JointDistribution& dist,
                        const std::vector<std::vector<std::string>>& partition) {
  const auto& ps = dist.parties();
  std::vector<PartyMask> blocks;
  PartyMask covered = 0;
  for (const auto& block : partition) {
    if (block.empty()) throw InvalidArgument("partition has an empty block");
    const auto m = ps.mask_of(block);
    if (m & covered) throw InvalidArgument("partition blocks overlap");
    covered |= m;
    blocks.push_back(m);
  }
  if (covered != ps.all()) throw InvalidArgument("partition does not cover every party");

  std::vector<std::string> labels;
  std::vector<std::size_t> cards;
  for (auto m : blocks) {
    std::string label;
    std::size_t card = 1;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (has(m, i)) {
        label += ps.label(i);
        card *= ps.cardinality(i);
      }
    }
    labels.push_back(std::move(label));
    cards.push_back(card);
  }
  PartySet out_ps(std::move(labels), std::move(cards));

  std::vector<double> t(dist.table().size());
  for (std::size_t o = 0; o < t.size(); ++o) {
    const auto coords = dist.outcome_of(o);
    std::size_t index = 0;
    for (auto m : blocks) {
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (has(m, i)) index = index * ps.cardinality(i) + coords[i];
      }
    }
    t[index] = dist.table()[o];
  }
  return JointDistribution::computed(std::move(out_ps), std::move(t));
}

JointDistribution tensor(const JointDistribution& d1, const JointDistribution& d2) {
  const auto& p1 = d1.parties();
  const auto& p2 = d2.parties();
  if (p1.labels() != p2.labels()) throw InvalidArgument("tensor needs identical party labels");
  std::vector<std::size_t> cards(p1.size());
  for (std::size_t i = 0; i < cards.size(); ++i) {
    cards[i] = p1.cardinality(i) * p2.cardinality(i);
  }
  PartySet ps(p1.labels(), cards);

  std::vector<double> t(ps.total());
  std::vector<std::size_t> coords(cards.size());
  for (std::size_t a = 0; a < d1.table().size(); ++a) {
    const auto ca = d1.outcome_of(a);
    for (std::size_t b = 0; b < d2.table().size(); ++b) {
      const auto cb = d2.outcome_of(b);
      for (std::size_t i = 0; i < cards.size(); ++i) {
        coords[i] = ca[i] * p2.cardinality(i) + cb[i];
      }
      t[encode(coords, cards)] = d1.table()[a] * d2.table()[b];
    }
  }
  return JointDistribution::computed(std::move(ps), std::move(t));
}

JointDistribution product_of_marginals(const JointDistribution& dist) {
  const auto& ps = dist.parties();
  std::vector<std::vector<double>> marginals;
  for (std::size_t i = 0; i < ps.size(); ++i) marginals.push_back(marginalize(dist, bit(i)).table());
  std::vector<double> t(dist.table().size());
  for (std::size_t o = 0; o < t.size(); ++o) {
    const auto c = dist.outcome_of(o);
    double p = 1.0;
    for (std::size_t i = 0; i < c.size(); ++i) p *= marginals[i][c[i]];
    t[o] = p;
  }
  return JointDistribution::computed(ps, std::move(t));
}

JointDistribution permute(const JointDistribution& dist, std::span<const std::size_t> order) {
  const auto& ps = dist.parties();
  if (order.size() != ps.size()) throw InvalidArgument("permutation has the wrong length");
  std::vector<bool> seen(order.size(), false);
  std::vector<std::string> labels;
  std::vector<std::size_t> cards;
  for (auto k : order) {
    if (k >= order.size() || seen[k]) throw InvalidArgument("not a permutation");
    seen[k] = true;
    labels.push_back(ps.label(k));
    cards.push_back(ps.cardinality(k));
  }
  std::vector<double> t(dist.table().size());
  std::vector<std::size_t> coords(order.size());
  for (std::size_t o = 0; o < t.size(); ++o) {
    const auto c = dist.outcome_of(o);
    for (std::size_t k = 0; k < order.size(); ++k) coords[k] = c[order[k]];
    t[encode(coords, cards)] = dist.table()[o];
  }
  return JointDistribution::computed(PartySet(std::move(labels), std::move(cards)), std::move(t));
}

double total_variation(const JointDistribution& p, const JointDistribution& q) {
  if (!(p.parties() == q.parties())) {
    throw InvalidArgument("total variation needs identical parties and alphabets");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < p.table().size(); ++i) {
    acc += std::abs(p.table()[i] - q.table()[i]);
  }
  return acc / 2.0;
}

}  // namespace secmon
