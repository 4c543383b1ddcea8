#pragma once

// S_n and T_n written against an abstract subset-entropy oracle `h(mask)`, so
// the same rewrites serve Shannon entropies of a table and von Neumann
// entropies of reduced density matrices. Parties are 0..n-1; h(0) must be 0.

#include <cstddef>
#include <vector>

#include "secmon/party_set.hpp"

namespace secmon::formulas {

inline PartyMask first(std::size_t k) { return k >= 64 ? ~PartyMask{0} : bit(k) - 1; }

template <class H>
double cmi(H& h, PartyMask x, PartyMask y, PartyMask z) {
  return h(x | z) + h(y | z) - h(z) - h(x | y | z);
}

/// H(all) - sum_i H(A_i | rest).
template <class H>
double s_n_definition(std::size_t n, H& h) {
  const auto all = first(n);
  const double joint = h(all);
  double s = joint;
  for (std::size_t i = 0; i < n; ++i) s -= joint - h(all & ~bit(i));
  return s;
}

/// sum_i H(rest_i) - (n-1) H(all).
template <class H>
double s_n_subsets(std::size_t n, H& h) {
  const auto all = first(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += h(all & ~bit(i));
  return s - static_cast<double>(n - 1) * h(all);
}

/// I(A_1 : A_2..A_n) + sum_{i=2}^{n-1} I(A_i : A_{i+1}..A_n | A_1..A_{i-1}).
template <class H>
double s_n_chain(std::size_t n, H& h) {
  const auto all = first(n);
  double s = cmi(h, bit(0), all & ~bit(0), 0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    s += cmi(h, bit(i), all & ~first(i + 1), first(i));
  }
  return s;
}

/// Recurrence merging the last two blocks:
/// S(b_0:..:b_{m-1}) = S(b_0:..:b_{m-2} b_{m-1}) + I(b_{m-2} : b_{m-1} | b_0..b_{m-3}).
template <class H>
double s_n_recurrence(std::vector<PartyMask> blocks, H& h) {
  double s = 0.0;
  while (blocks.size() > 2) {
    const auto last = blocks.back();
    blocks.pop_back();
    const auto prev = blocks.back();
    PartyMask before = 0;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) before |= blocks[k];
    s += cmi(h, prev, last, before);
    blocks.back() = prev | last;
  }
  return s + cmi(h, blocks[0], blocks[1], 0);
}

template <class H>
double s_n_recurrence(std::size_t n, H& h) {
  std::vector<PartyMask> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks.push_back(bit(i));
  return s_n_recurrence(std::move(blocks), h);
}

/// sum_i H(A_i) - H(all).
template <class H>
double t_n_definition(std::size_t n, H& h) {
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) t += h(bit(i));
  return t - h(first(n));
}

/// I(A_1:A_2) + sum_{i=2}^{n-1} I(A_1..A_i : A_{i+1}).
template <class H>
double t_n_chain(std::size_t n, H& h) {
  double t = cmi(h, bit(0), bit(1), 0);
  for (std::size_t i = 2; i < n; ++i) t += cmi(h, first(i), bit(i), 0);
  return t;
}

/// sum_i I(A_i : rest), which equals S_n + T_n.
template <class H>
double sum_of_single_cuts(std::size_t n, H& h) {
  const auto all = first(n);
  double v = 0.0;
  for (std::size_t i = 0; i < n; ++i) v += cmi(h, bit(i), all & ~bit(i), 0);
  return v;
}

}  // namespace secmon::formulas
