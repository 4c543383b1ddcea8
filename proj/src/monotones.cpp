#include "secmon/monotones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secmon/error.hpp"
#include "secmon/formulas.hpp"
#include "secmon/parallel.hpp"
#include "secmon/random.hpp"
#include "secmon/tolerance.hpp"

namespace secmon {

namespace {

void require_at_least_two(const JointDistribution& dist) {
  if (dist.party_count() < 2) throw InvalidArgument("monotone needs at least 2 parties");
}

void require_three(const JointDistribution& dist) {
  if (dist.party_count() != 3) {
    throw InvalidArgument("tripartite quantity needs exactly 3 parties, got " +
                          std::to_string(dist.party_count()));
  }
}

}  // namespace

Bits s_n(const JointDistribution& dist, SnForm form) {
  require_at_least_two(dist);
  EntropyCache h(dist);
  const auto n = dist.party_count();
  switch (form) {
    case SnForm::definition:
      return formulas::s_n_definition(n, h);
    case SnForm::subsets:
      return formulas::s_n_subsets(n, h);
    case SnForm::chain:
      return formulas::s_n_chain(n, h);
    case SnForm::recurrence:
      return formulas::s_n_recurrence(n, h);
  }
  throw InvalidArgument("unknown S_n form");
}

Bits t_n(const JointDistribution& dist, TnForm form) {
  require_at_least_two(dist);
  EntropyCache h(dist);
  const auto n = dist.party_count();
  switch (form) {
    case TnForm::definition:
      return formulas::t_n_definition(n, h);
    case TnForm::chain:
      return formulas::t_n_chain(n, h);
    case TnForm::relative_entropy:
      return relative_entropy(dist, product_of_marginals(dist));
  }
  throw InvalidArgument("unknown T_n form");
}

Bits m_lambda(const JointDistribution& dist, double lambda) {
  return lambda * s_n(dist) + (1.0 - lambda) * t_n(dist);
}

Bits grouped_s2(const JointDistribution& dist,
                const std::vector<std::vector<std::string>>& bipartition) {
  if (bipartition.size() != 2) throw InvalidArgument("bipartition must have exactly 2 blocks");
  return s_n(group(dist, bipartition));
}

Bits sum_of_single_cuts(const JointDistribution& dist) {
  require_at_least_two(dist);
  EntropyCache h(dist);
  return formulas::sum_of_single_cuts(dist.party_count(), h);
}

FiveVector five_vector(const JointDistribution& dist) {
  require_three(dist);
  EntropyCache h(dist);
  const PartyMask a = bit(0), b = bit(1), c = bit(2);
  FiveVector v;
  v.s2_a_bc = formulas::cmi(h, a, b | c, 0);
  v.s2_b_ac = formulas::cmi(h, b, a | c, 0);
  v.s2_c_ab = formulas::cmi(h, c, a | b, 0);
  v.s3 = formulas::s_n_definition(3, h);
  v.t3 = formulas::t_n_definition(3, h);
  return v;
}

bool VennQuantities::positivity_holds(double tolerance) const {
  return r >= -tolerance && s >= -tolerance && t >= -tolerance && r + u >= -tolerance &&
         s + u >= -tolerance && t + u >= -tolerance;
}

VennQuantities venn(const JointDistribution& dist) {
  require_three(dist);
  EntropyCache h(dist);
  const PartyMask a = bit(0), b = bit(1), c = bit(2);
  VennQuantities q;
  q.r = formulas::cmi(h, a, b, c);
  q.s = formulas::cmi(h, b, c, a);
  q.t = formulas::cmi(h, c, a, b);
  q.u = formulas::cmi(h, a, b, 0) - q.r;

  const double s3 = formulas::s_n_definition(3, h);
  const double t3 = formulas::t_n_definition(3, h);
  if (std::abs(s3 - (q.r + q.s + q.t + q.u)) > tol::kBits ||
      std::abs(t3 - (q.r + q.s + q.t + 2.0 * q.u)) > tol::kBits) {
    throw InternalError("Venn quantities do not reproduce S_3 and T_3");
  }
  return q;
}

CanonicalYields canonical_decomposition(const JointDistribution& dist) {
  const auto q = venn(dist);
  CanonicalYields y;
  if (q.u >= 0.0) {
    y.y1 = q.r;
    y.y2 = q.s;
    y.y3 = q.t;
    y.y4 = 0.0;
    y.y5 = q.u;
  } else {
    y.y1 = q.r + q.u;
    y.y2 = q.s + q.u;
    y.y3 = q.t + q.u;
    y.y4 = -q.u;
    y.y5 = 0.0;
  }
  const auto v = y.values();
  y.feasible = std::all_of(v.begin(), v.end(), [](double x) { return x >= -tol::kBits; });
  return y;
}

FiveVector five_vector_of_yields(const CanonicalYields& y) {
  // Rows of the canonical table: (S2(A:BC), S2(B:AC), S2(C:AB), S3, T3).
  constexpr std::array<std::array<double, 5>, 5> rows{{
      {1, 1, 0, 1, 1},  // P2_AB
      {0, 1, 1, 1, 1},  // P2_BC
      {1, 0, 1, 1, 1},  // P2_AC
      {1, 1, 1, 2, 1},  // P^x
      {1, 1, 1, 1, 2},  // P^3
  }};
  const auto w = y.values();
  std::array<double, 5> acc{};
  for (std::size_t k = 0; k < 5; ++k) {
    for (std::size_t j = 0; j < 5; ++j) acc[j] += w[k] * rows[k][j];
  }
  return {acc[0], acc[1], acc[2], acc[3], acc[4]};
}

Monotone s_n_monotone() {
  return {"S_n", [](const JointDistribution& d) { return s_n(d); }};
}

Monotone t_n_monotone() {
  return {"T_n", [](const JointDistribution& d) { return t_n(d); }};
}

Monotone m_lambda_monotone(double lambda) {
  return {"M_lambda(" + std::to_string(lambda) + ")",
          [lambda](const JointDistribution& d) { return m_lambda(d, lambda); }};
}

Monotone grouped_s2_monotone(std::vector<std::string> block) {
  std::string name = "S_2(";
  for (const auto& l : block) name += l;
  name += ":rest)";
  return {std::move(name), [block = std::move(block)](const JointDistribution& d) {
            const auto m = d.parties().mask_of(block);
            std::vector<std::string> rest;
            for (std::size_t i = 0; i < d.party_count(); ++i) {
              if (!has(m, i)) rest.push_back(d.parties().label(i));
            }
            return grouped_s2(d, {block, rest});
          }};
}

std::vector<Monotone> default_monotones(const PartySet& parties) {
  std::vector<Monotone> ms{s_n_monotone(), t_n_monotone()};
  if (parties.size() > 2) {
    for (const auto& l : parties.labels()) ms.push_back(grouped_s2_monotone({l}));
  }
  return ms;
}

YieldBound yield_bound(const JointDistribution& source, const JointDistribution& target,
                       std::vector<Monotone> monotones) {
  if (source.parties().labels() != target.parties().labels()) {
    throw InvalidArgument("yield bound needs source and target over the same party labels");
  }
  if (monotones.empty()) monotones = default_monotones(target.parties());
  YieldBound out;
  out.ratio = std::numeric_limits<double>::infinity();
  for (const auto& m : monotones) {
    const double denom = m.eval(target);
    if (!(denom > tol::kBits)) continue;
    const double ratio = std::max(0.0, m.eval(source)) / denom;
    out.ratios.emplace_back(m.name, ratio);
    if (ratio < out.ratio) {
      out.ratio = ratio;
      out.limiting = m.name;
    }
  }
  if (out.ratios.empty()) {
    throw InvalidArgument("target carries no secrecy: every monotone vanishes on it");
  }
  return out;
}

namespace {

PartyMask non_eve_mask(const JointDistribution& dist, std::size_t eve) {
  if (dist.party_count() < 3) {
    throw InvalidArgument("Eve-conditioned monotones need at least 2 parties besides Eve");
  }
  return dist.parties().all() & ~bit(eve);
}

Bits eve_average_at(const JointDistribution& dist, std::size_t eve, PartyMask rest,
                    const Monotone& base) {
  const auto& ps = dist.parties();
  const auto ens = announce(dist, ps.label(eve), StochasticChannel::identity(ps.cardinality(eve)));
  Bits acc = 0.0;
  for (const auto& m : ens.members()) acc += m.weight * base.eval(marginalize(m.dist, rest));
  return acc;
}

// Enumerates all maps {0..n-1} -> {0..n-1} in lexicographic order.
std::vector<std::size_t> nth_map(std::size_t index, std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t k = n; k-- > 0;) {
    map[k] = index % n;
    index /= n;
  }
  return map;
}

}  // namespace

Bits eve_average(const JointDistribution& dist, const std::string& eve, const Monotone& base) {
  const auto e = dist.parties().index_of(eve);
  return eve_average_at(dist, e, non_eve_mask(dist, e), base);
}

EveMinResult eve_min(const JointDistribution& dist, const std::string& eve, const Monotone& base,
                     const EveSearchOptions& options) {
  const auto e = dist.parties().index_of(eve);
  const auto rest = non_eve_mask(dist, e);
  if (!options.exhaustive && options.random_samples == 0) {
    throw InvalidArgument("Eve search needs exhaustive enumeration or random samples");
  }
  const auto card = dist.parties().cardinality(e);

  // Candidate 0 is always the identity, so M_down <= M_1.
  std::vector<StochasticChannel> candidates{StochasticChannel::identity(card)};
  const bool exhaustive = options.exhaustive && card <= kMaxExhaustiveEve;
  if (exhaustive) {
    std::size_t count = 1;
    for (std::size_t k = 0; k < card; ++k) count *= card;
    for (std::size_t i = 0; i < count; ++i) {
      candidates.push_back(StochasticChannel::deterministic(nth_map(i, card), card));
    }
  }
  for (std::size_t i = 0; i < options.random_samples; ++i) {
    auto rng = rnd::make_engine(rnd::derive_seed(options.seed, 0xE5E, i));
    candidates.push_back(rnd::channel(rng, card, card));
  }

  std::vector<Bits> values(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    values[i] = eve_average_at(apply_channel(dist, eve, candidates[i]), e, rest, base);
  });
  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());

  EveMinResult r;
  r.value = values[best];
  r.exhaustive = exhaustive;
  r.candidates = candidates.size();
  r.best_channel = candidates[best];
  return r;
}

}  // namespace secmon
