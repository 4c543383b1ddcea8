#pragma once

// Seeded randomized property checks for the classical monotones, their Eve
// extensions and the quantum monotones.
//
// Every trial draws its instance from its own generator, seeded by
// trial_seed(master, check, index). A failure records that per-trial seed, and
// rerun_trial() with it replays exactly that trial.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "secmon/distribution.hpp"
#include "secmon/entropy.hpp"

namespace secmon::verify {

struct Failure {
  std::uint64_t seed = 0;
  std::string description;
  double observed = 0;
  double bound = 0;
};

struct CheckReport {
  std::string check_name;
  std::size_t trials = 0;
  std::vector<Failure> failures;  // sorted by seed, then description
  double tolerance = 0;
  /// Counterexample searches are informational: failures there are findings.
  bool required = true;

  bool passed() const noexcept { return failures.empty(); }
};

/// Test hook: replaces S_n in the monotonicity-type checks.
struct ClassicalHooks {
  std::function<Bits(const JointDistribution&)> s_n;
};

enum class Suite { classical, eve, quantum };

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t max_parties = 4;
  std::size_t max_alphabet = 4;
  std::size_t max_dim = 64;
  ClassicalHooks hooks;
};

std::uint64_t trial_seed(std::uint64_t master, const std::string& check, std::size_t index);

/// Throws InvalidArgument if trials == 0, max_parties < 2 or max_alphabet < 2.
std::vector<CheckReport> check_classical_properties(std::uint64_t seed, std::size_t trials,
                                                    std::size_t max_parties = 4,
                                                    std::size_t max_alphabet = 4,
                                                    const ClassicalHooks& hooks = {});

/// Three honest parties plus Eve. Eve operations in the M_down checks are
/// deterministic maps, for which the exhaustive search is exact.
std::vector<CheckReport> check_eve_properties(std::uint64_t seed, std::size_t trials);

/// Random states with total dimension <= max_dim (at least 8, at most 2^12).
std::vector<CheckReport> check_quantum_properties(std::uint64_t seed, std::size_t trials,
                                                  std::size_t max_dim = 64);

std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& options);

/// Failures of one trial of `check`, given its recorded per-trial seed.
std::vector<Failure> rerun_trial(Suite suite, const std::string& check, std::uint64_t seed,
                                 const SuiteOptions& options = {});

/// Names of the checks of a suite, in report order.
std::vector<std::string> check_names(Suite suite);

Suite suite_from_string(const std::string& name);
std::string to_string(Suite suite);

/// True iff every required report passed.
bool all_required_pass(const std::vector<CheckReport>& reports);

}  // namespace secmon::verify
