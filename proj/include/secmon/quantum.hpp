#pragma once

// Finite-dimensional multipartite quantum states, local CP maps and
// measurements, and the quantum versions of S_n and T_n.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "secmon/distribution.hpp"
#include "secmon/entropy.hpp"
#include "secmon/monotones.hpp"
#include "secmon/random.hpp"

namespace secmon {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Hermitian, PSD, unit-trace matrix over the tensor product of the parties'
/// Hilbert spaces (party 0 most significant). The spectrum is computed once
/// at construction.
class DensityMatrix {
 public:
  /// Rejects deviations beyond 1e-9 in Hermiticity, trace or min eigenvalue.
  DensityMatrix(PartySet parties, CMatrix matrix);

  /// For matrices produced by library operations; violations are InternalError.
  static DensityMatrix computed(PartySet parties, CMatrix matrix);

  /// Diagonal state carrying a classical distribution.
  static DensityMatrix diagonal(const JointDistribution& dist);

  const PartySet& parties() const noexcept { return parties_; }
  const CMatrix& matrix() const noexcept { return matrix_; }
  /// Eigenvalues, ascending, with values in [-1e-9, 0) clamped to 0.
  const Eigen::VectorXd& spectrum() const noexcept { return spectrum_; }
  std::size_t dim() const noexcept { return parties_.total(); }

 private:
  struct Trusted {};
  DensityMatrix(Trusted, PartySet parties, CMatrix matrix, bool internal);

  PartySet parties_;
  CMatrix matrix_;
  Eigen::VectorXd spectrum_;
};

class PureState {
 public:
  /// Norm must be 1 within 1e-12.
  PureState(PartySet parties, CVector amplitudes);

  const PartySet& parties() const noexcept { return parties_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }
  DensityMatrix density() const;

 private:
  PartySet parties_;
  CVector amplitudes_;
};

/// CP map in Kraus form: out_dim x in_dim operators with sum K^dagger K = I.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<CMatrix> operators);

  static KrausChannel identity(std::size_t d);
  /// Complete dephasing in the computational basis.
  static KrausChannel dephasing(std::size_t d);
  /// Isometry V of shape (out_dim * env) x in_dim, output index (out, env)
  /// row-major; the environment factor is traced out.
  static KrausChannel from_isometry(const CMatrix& isometry, std::size_t out_dim);
  /// Ancilla of dimension aux_dim prepared in |0>, unitary on (system, ancilla),
  /// then everything but the leading out_dim factor traced out.
  static KrausChannel from_unitary_dilation(const CMatrix& unitary, std::size_t in_dim,
                                            std::size_t aux_dim, std::size_t out_dim);

  std::size_t in_dim() const noexcept { return in_; }
  std::size_t out_dim() const noexcept { return out_; }
  const std::vector<CMatrix>& operators() const noexcept { return ops_; }

 private:
  std::size_t in_ = 0;
  std::size_t out_ = 0;
  std::vector<CMatrix> ops_;
};

/// Measurement with labeled outcomes; outcome k leaves M_k rho M_k^dagger / p_k.
class Instrument {
 public:
  explicit Instrument(std::vector<std::pair<std::string, CMatrix>> outcomes);

  static Instrument trivial(std::size_t d);
  /// Projective measurement onto the columns of an orthonormal basis.
  static Instrument projective(const CMatrix& basis);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::pair<std::string, CMatrix>>& outcomes() const noexcept {
    return outcomes_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::pair<std::string, CMatrix>> outcomes_;
};

struct QuantumMember {
  double weight;
  DensityMatrix state;
  std::string outcome;
};

class QuantumEnsemble {
 public:
  /// Weights >= 0 summing to 1 within 1e-12; zero-weight members dropped.
  explicit QuantumEnsemble(std::vector<QuantumMember> members);
  const std::vector<QuantumMember>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::vector<QuantumMember> members_;
};

DensityMatrix partial_trace(const DensityMatrix& rho, PartyMask keep);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep);

/// -Tr(rho log2 rho).
Bits von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of the reduced state on `subset`; 0 for the empty set.
Bits subsystem_entropy(const DensityMatrix& rho, PartyMask subset);

/// Quantum S_n: sum_i S(rest_i) - (n-1) S(all), or the chain rewrite.
Bits q_s_n(const DensityMatrix& rho, SnForm form = SnForm::subsets);
/// Quantum T_n: sum_i S(A_i) - S(all), or the chain rewrite. The relative
/// entropy form is classical only.
Bits q_t_n(const DensityMatrix& rho, TnForm form = TnForm::definition);
/// sum_i I(A_i : rest) with quantum mutual informations.
Bits q_sum_of_single_cuts(const DensityMatrix& rho);
/// S(XZ) + S(YZ) - S(Z) - S(XYZ).
Bits q_conditional_mutual_information(const DensityMatrix& rho, PartyMask x, PartyMask y,
                                      PartyMask z);

/// sum (K (x) I) rho (K (x) I)^dagger on `party`; its dimension becomes out_dim.
DensityMatrix apply_local_channel(const DensityMatrix& rho, const std::string& party,
                                  const KrausChannel& channel);

/// One member per outcome with nonzero probability, in instrument order.
QuantumEnsemble measure_and_announce(const DensityMatrix& rho, const std::string& party,
                                     const Instrument& instrument);

/// Born-rule distribution of simultaneous local projective measurements; the
/// k-th column of bases[i] is outcome k of party i.
JointDistribution measure_all(const DensityMatrix& rho, const std::vector<CMatrix>& bases);

/// sum_i S(rho_i); checked against q_s_n and q_t_n of |psi><psi|.
Bits pure_state_monotone(const PureState& psi);

struct SumHalving {
  Bits bound = 0;       // sum_i S(rho_i) of the pure state
  Bits s_plus_t = 0;    // S_n + T_n of the target distribution
  bool satisfied = false;
};

/// S_n + T_n of any distribution extracted from psi by LOCC is at most sum_i S(rho_i).
SumHalving sum_halving_bound(const PureState& psi, const JointDistribution& target);

/// (|0...0> + |1...1>)/sqrt 2 over parties A, B, C, ...
PureState ghz(std::size_t n);

/// Computational basis.
CMatrix basis_z(std::size_t d);
/// Fourier basis; (|0> +- |1>)/sqrt 2 for qubits.
CMatrix basis_x(std::size_t d);
/// (|0> +- i|1>)/sqrt 2; qubits only.
CMatrix basis_y();
/// "z", "x" or "y".
CMatrix basis_by_name(const std::string& name, std::size_t d);

/// Max |U^dagger U - I|.
double orthonormality_defect(const CMatrix& basis);

namespace qrnd {

CMatrix gaussian(rnd::Engine& rng, std::size_t rows, std::size_t cols);
/// Haar unitary (QR with phase correction).
CMatrix unitary(rnd::Engine& rng, std::size_t d);
PureState pure_state(rnd::Engine& rng, const PartySet& parties);
/// G G^dagger / Tr, i.e. a pure state with an equal-size ancilla traced out.
DensityMatrix mixed_state(rnd::Engine& rng, const PartySet& parties);
/// Stinespring isometry in -> out (x) env with `kraus_count` environment levels.
KrausChannel channel(rnd::Engine& rng, std::size_t in, std::size_t out, std::size_t kraus_count);
Instrument instrument(rnd::Engine& rng, std::size_t d, std::size_t outcomes);

}  // namespace qrnd

}  // namespace secmon
