#pragma once

// Seeded random instances. Every generator is derived from a (seed, stream)
// pair, so trials can run in any order or in parallel and still reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "secmon/distribution.hpp"

namespace secmon::rnd {

using Engine = std::mt19937_64;

/// Mixes a master seed with stream identifiers through std::seed_seq.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index = 0);

Engine make_engine(std::uint64_t seed);

/// Uniform point of the probability simplex (normalized exponentials).
std::vector<double> simplex(Engine& rng, std::size_t n);

/// Full-support random distribution over `parties`.
JointDistribution distribution(Engine& rng, const PartySet& parties);

/// Each row drawn uniformly from the simplex.
StochasticChannel channel(Engine& rng, std::size_t in, std::size_t out);

/// Uniform map {0..in-1} -> {0..out-1}.
StochasticChannel deterministic_channel(Engine& rng, std::size_t in, std::size_t out);

std::size_t uniform_index(Engine& rng, std::size_t lo, std::size_t hi_inclusive);
double uniform_real(Engine& rng, double lo, double hi);

/// Labels "A", "B", ... with cardinalities in [min_card, max_card].
PartySet party_set(Engine& rng, std::size_t n, std::size_t min_card, std::size_t max_card);

}  // namespace secmon::rnd
