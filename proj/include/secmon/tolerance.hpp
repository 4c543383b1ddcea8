#pragma once

#include <cstddef>

namespace secmon::tol {

// Normalization of user-supplied probability tables and channel rows.
inline constexpr double kInputProbability = 1e-12;
// Normalization of tables produced by library operations.
inline constexpr double kComputedProbability = 1e-9;
// Comparisons of bit-valued quantities (monotones, entropies).
inline constexpr double kBits = 1e-9;
// Hermiticity, trace and PSD checks on density matrices; Kraus completeness.
inline constexpr double kState = 1e-9;
// Norm of pure-state vectors.
inline constexpr double kPureNorm = 1e-12;
// Terminal-distribution matching in protocol runs (total variation).
inline constexpr double kMatch = 1e-12;

inline constexpr std::size_t kMaxOutcomes = std::size_t{1} << 24;
inline constexpr std::size_t kMaxHilbertDim = std::size_t{1} << 12;
inline constexpr std::size_t kMaxParties = 64;

}  // namespace secmon::tol
