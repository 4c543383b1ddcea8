#pragma once

// Dense data-parallel kernels behind probdist and quantum.
//
// Every kernel gathers one output cell at a time and sums its contributions in
// increasing input-index order. The OpenMP versions only distribute output
// cells across threads, so they are bitwise identical to the serial reference
// in `kernels::serial` regardless of thread count.

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "secmon/party_set.hpp"

namespace secmon::kernels {

/// Sum of a row-major table over the parties not in `keep`.
std::vector<double> marginalize(std::span<const double> table,
                                std::span<const std::size_t> cards, PartyMask keep);

/// out[..., b, ...] = sum_a kernel[a * out_card + b] * table[..., a, ...] on `axis`.
std::vector<double> apply_axis_kernel(std::span<const double> table,
                                      std::span<const std::size_t> cards, std::size_t axis,
                                      std::span<const double> kernel, std::size_t out_card);

/// Reduced density matrix on the parties in `keep`.
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho,
                               std::span<const std::size_t> dims, PartyMask keep);

namespace serial {

std::vector<double> marginalize(std::span<const double> table,
                                std::span<const std::size_t> cards, PartyMask keep);
std::vector<double> apply_axis_kernel(std::span<const double> table,
                                      std::span<const std::size_t> cards, std::size_t axis,
                                      std::span<const double> kernel, std::size_t out_card);
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho,
                               std::span<const std::size_t> dims, PartyMask keep);

}  // namespace serial

/// Threads OpenMP will use for the parallel kernels (1 without OpenMP).
int max_threads();

}  // namespace secmon::kernels
