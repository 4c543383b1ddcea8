#include "secmon/random.hpp"

#include <array>

namespace secmon::rnd {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(master), hi(master), lo(stream), hi(stream), lo(index), hi(index)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[1]} << 32) | out[0];
}

Engine make_engine(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return Engine(seq);
}

std::vector<double> simplex(Engine& rng, std::size_t n) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) {
    // exp1 can return 0 with negligible probability; keep full support.
    do {
      x = exp1(rng);
    } while (x <= 0.0);
    sum += x;
  }
  for (auto& x : v) x /= sum;
  return v;
}

JointDistribution distribution(Engine& rng, const PartySet& parties) {
  return JointDistribution::computed(parties, simplex(rng, parties.total()));
}

StochasticChannel channel(Engine& rng, std::size_t in, std::size_t out) {
  std::vector<double> k;
  k.reserve(in * out);
  for (std::size_t a = 0; a < in; ++a) {
    const auto row = simplex(rng, out);
    k.insert(k.end(), row.begin(), row.end());
  }
  return {in, out, std::move(k)};
}

StochasticChannel deterministic_channel(Engine& rng, std::size_t in, std::size_t out) {
  std::vector<std::size_t> map(in);
  for (auto& m : map) m = uniform_index(rng, 0, out - 1);
  return StochasticChannel::deterministic(map, out);
}

std::size_t uniform_index(Engine& rng, std::size_t lo, std::size_t hi_inclusive) {
  return std::uniform_int_distribution<std::size_t>(lo, hi_inclusive)(rng);
}

double uniform_real(Engine& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

PartySet party_set(Engine& rng, std::size_t n, std::size_t min_card, std::size_t max_card) {
  std::vector<std::string> labels;
  std::vector<std::size_t> cards;
  for (std::size_t i = 0; i < n; ++i) {
    labels.emplace_back(1, static_cast<char>('A' + i));
    cards.push_back(uniform_index(rng, min_card, max_card));
  }
  return PartySet(std::move(labels), std::move(cards));
}

}  // namespace secmon::rnd
