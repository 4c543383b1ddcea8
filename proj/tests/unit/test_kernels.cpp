#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "secmon/kernels.hpp"

using namespace secmon;

namespace {

std::vector<double> random_table(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> t(n);
  double total = 0.0;
  for (auto& x : t) total += (x = u(rng));
  for (auto& x : t) x /= total;
  return t;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

class KernelThreads : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }
  int saved_ = 1;
};

}  // namespace

TEST_F(KernelThreads, MarginalizeMatchesSerialBitwise) {
  std::mt19937_64 rng(7);
  const std::vector<std::size_t> cards{4, 8, 4, 8, 4, 8};  // 2^15 cells
  const auto t = random_table(rng, 32768);
  for (PartyMask keep = 0; keep < 64; ++keep) {
    EXPECT_TRUE(bitwise_equal(kernels::marginalize(t, cards, keep),
                              kernels::serial::marginalize(t, cards, keep)))
        << "keep=" << keep;
  }
}

TEST_F(KernelThreads, AxisKernelMatchesSerialBitwise) {
  std::mt19937_64 rng(8);
  const std::vector<std::size_t> cards{8, 8, 8, 8, 4};
  const auto t = random_table(rng, 16384);
  for (std::size_t axis = 0; axis < cards.size(); ++axis) {
    const std::size_t in = cards[axis];
    for (std::size_t out : {std::size_t{1}, std::size_t{3}, in}) {
      std::vector<double> k;
      for (std::size_t a = 0; a < in; ++a) {
        auto row = random_table(rng, out);
        k.insert(k.end(), row.begin(), row.end());
      }
      EXPECT_TRUE(bitwise_equal(kernels::apply_axis_kernel(t, cards, axis, k, out),
                                kernels::serial::apply_axis_kernel(t, cards, axis, k, out)))
          << "axis=" << axis << " out=" << out;
    }
  }
}

TEST_F(KernelThreads, PartialTraceMatchesSerialBitwise) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  const std::vector<std::size_t> dims{4, 4, 4, 4};
  Eigen::MatrixXcd m(256, 256);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = {g(rng), g(rng)};
  }
  Eigen::MatrixXcd rho = m * m.adjoint();
  rho /= rho.trace();
  for (PartyMask keep = 0; keep < 16; ++keep) {
    const auto a = kernels::partial_trace(rho, dims, keep);
    const auto b = kernels::serial::partial_trace(rho, dims, keep);
    ASSERT_EQ(a.rows(), b.rows());
    EXPECT_TRUE((a.array() == b.array()).all()) << "keep=" << keep;
  }
}

TEST(Kernels, MarginalizeSmallByHand) {
  // cards (2,3): rows are party 0.
  const std::vector<double> t{0.1, 0.2, 0.05, 0.15, 0.3, 0.2};
  const std::vector<std::size_t> cards{2, 3};
  const auto a = kernels::serial::marginalize(t, cards, 0b01);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(a[0], 0.35, 1e-15);
  EXPECT_NEAR(a[1], 0.65, 1e-15);
  const auto b = kernels::serial::marginalize(t, cards, 0b10);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_NEAR(b[0], 0.25, 1e-15);
  EXPECT_NEAR(b[1], 0.5, 1e-15);
  EXPECT_NEAR(b[2], 0.25, 1e-15);
  const auto none = kernels::serial::marginalize(t, cards, 0);
  ASSERT_EQ(none.size(), 1u);
  EXPECT_NEAR(none[0], 1.0, 1e-15);
}

TEST(Kernels, AxisKernelByHand) {
  const std::vector<double> t{0.5, 0.0, 0.0, 0.5};
  const std::vector<std::size_t> cards{2, 2};
  const std::vector<double> flip{0.75, 0.25, 0.25, 0.75};
  const auto out = kernels::serial::apply_axis_kernel(t, cards, 1, flip, 2);
  EXPECT_NEAR(out[0], 0.375, 1e-15);
  EXPECT_NEAR(out[1], 0.125, 1e-15);
  EXPECT_NEAR(out[2], 0.125, 1e-15);
  EXPECT_NEAR(out[3], 0.375, 1e-15);
}

TEST(Kernels, MaxThreadsPositive) { EXPECT_GE(kernels::max_threads(), 1); }
