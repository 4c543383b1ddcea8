#include "secmon/kernels.hpp"

#include <complex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace secmon::kernels {

namespace {

// Below this many input reads a kernel runs on the calling thread.
constexpr std::size_t kParallelWork = std::size_t{1} << 15;

std::vector<std::size_t> strides_of(std::span<const std::size_t> cards) {
  std::vector<std::size_t> s(cards.size(), 1);
  for (std::size_t i = cards.size(); i-- > 1;) s[i - 1] = s[i] * cards[i];
  return s;
}

// Splits the axes into kept (decoded from an output index) and summed
// (enumerated as ascending input offsets).
struct GatherPlan {
  std::vector<std::size_t> kept_cards;
  std::vector<std::size_t> kept_strides;
  std::vector<std::size_t> summed_offsets;
  std::size_t out_size = 1;

  GatherPlan(std::span<const std::size_t> cards, PartyMask keep) {
    const auto strides = strides_of(cards);
    summed_offsets.assign(1, 0);
    for (std::size_t i = 0; i < cards.size(); ++i) {
      if (has(keep, i)) {
        kept_cards.push_back(cards[i]);
        kept_strides.push_back(strides[i]);
        out_size *= cards[i];
      } else {
        // Lexicographic in the summed coordinates, i.e. ascending offsets.
        std::vector<std::size_t> next;
        next.reserve(summed_offsets.size() * cards[i]);
        for (auto off : summed_offsets) {
          for (std::size_t a = 0; a < cards[i]; ++a) next.push_back(off + a * strides[i]);
        }
        summed_offsets = std::move(next);
      }
    }
  }

  std::size_t base(std::size_t out) const {
    std::size_t b = 0;
    for (std::size_t k = kept_cards.size(); k-- > 0;) {
      b += (out % kept_cards[k]) * kept_strides[k];
      out /= kept_cards[k];
    }
    return b;
  }

  double marginal_cell(std::span<const double> table, std::size_t out) const {
    const auto b = base(out);
    double acc = 0.0;
    for (auto off : summed_offsets) acc += table[b + off];
    return acc;
  }

  std::complex<double> trace_cell(const Eigen::MatrixXcd& rho, std::size_t r,
                                  std::size_t c) const {
    const auto br = static_cast<Eigen::Index>(base(r));
    const auto bc = static_cast<Eigen::Index>(base(c));
    std::complex<double> acc{0.0, 0.0};
    for (auto off : summed_offsets) {
      const auto o = static_cast<Eigen::Index>(off);
      acc += rho(br + o, bc + o);
    }
    return acc;
  }
};

struct AxisPlan {
  std::vector<std::size_t> out_cards;
  std::vector<std::size_t> in_strides;
  std::size_t axis;
  std::size_t in_card;
  std::size_t out_card;
  std::size_t out_size = 1;

  AxisPlan(std::span<const std::size_t> cards, std::size_t ax, std::size_t out)
      : out_cards(cards.begin(), cards.end()),
        in_strides(strides_of(cards)),
        axis(ax),
        in_card(cards[ax]),
        out_card(out) {
    out_cards[axis] = out_card;
    for (auto c : out_cards) out_size *= c;
  }

  double cell(std::span<const double> table, std::span<const double> kernel,
              std::size_t out) const {
    std::size_t b = 0;
    std::size_t symbol = 0;
    for (std::size_t k = out_cards.size(); k-- > 0;) {
      const auto coord = out % out_cards[k];
      out /= out_cards[k];
      if (k == axis) {
        symbol = coord;
      } else {
        b += coord * in_strides[k];
      }
    }
    double acc = 0.0;
    for (std::size_t a = 0; a < in_card; ++a) {
      acc += kernel[a * out_card + symbol] * table[b + a * in_strides[axis]];
    }
    return acc;
  }
};

}  // namespace

std::vector<double> marginalize(std::span<const double> table,
                                std::span<const std::size_t> cards, PartyMask keep) {
  const GatherPlan plan(cards, keep);
  std::vector<double> out(plan.out_size);
  const auto n = plan.out_size;
#pragma omp parallel for schedule(static) if (table.size() >= kParallelWork && n > 1)
  for (std::size_t o = 0; o < n; ++o) out[o] = plan.marginal_cell(table, o);
  return out;
}

std::vector<double> apply_axis_kernel(std::span<const double> table,
                                      std::span<const std::size_t> cards, std::size_t axis,
                                      std::span<const double> kernel, std::size_t out_card) {
  const AxisPlan plan(cards, axis, out_card);
  std::vector<double> out(plan.out_size);
  const auto n = plan.out_size;
#pragma omp parallel for schedule(static) if (n * plan.in_card >= kParallelWork)
  for (std::size_t o = 0; o < n; ++o) out[o] = plan.cell(table, kernel, o);
  return out;
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho,
                               std::span<const std::size_t> dims, PartyMask keep) {
  const GatherPlan plan(dims, keep);
  const auto d = plan.out_size;
  Eigen::MatrixXcd out(d, d);
  const auto work = d * d * plan.summed_offsets.size();
#pragma omp parallel for schedule(static) if (work >= kParallelWork)
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          plan.trace_cell(rho, r, c);
    }
  }
  return out;
}

namespace serial {

std::vector<double> marginalize(std::span<const double> table,
                                std::span<const std::size_t> cards, PartyMask keep) {
  const GatherPlan plan(cards, keep);
  std::vector<double> out(plan.out_size);
  for (std::size_t o = 0; o < plan.out_size; ++o) out[o] = plan.marginal_cell(table, o);
  return out;
}

std::vector<double> apply_axis_kernel(std::span<const double> table,
                                      std::span<const std::size_t> cards, std::size_t axis,
                                      std::span<const double> kernel, std::size_t out_card) {
  const AxisPlan plan(cards, axis, out_card);
  std::vector<double> out(plan.out_size);
  for (std::size_t o = 0; o < plan.out_size; ++o) out[o] = plan.cell(table, kernel, o);
  return out;
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho,
                               std::span<const std::size_t> dims, PartyMask keep) {
  const GatherPlan plan(dims, keep);
  const auto d = plan.out_size;
  Eigen::MatrixXcd out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          plan.trace_cell(rho, r, c);
    }
  }
  return out;
}

}  // namespace serial

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace secmon::kernels
