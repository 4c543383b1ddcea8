#include "secmon/quantum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <unordered_map>

#include "secmon/error.hpp"
#include "secmon/formulas.hpp"
#include "secmon/kernels.hpp"
#include "secmon/tolerance.hpp"

namespace secmon {

namespace {

using cd = std::complex<double>;

[[noreturn]] void fail(bool internal, const std::string& what) {
  if (internal) throw InternalError(what);
  throw InvalidArgument(what);
}

void check_dimension(const PartySet& parties) {
  if (parties.total() > tol::kMaxHilbertDim) {
    throw InstanceTooLarge("instance too large: Hilbert dimension above 2^12");
  }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// I_left (x) op (x) I_right with `op` acting on party j.
CMatrix embed(const CMatrix& op, const PartySet& parties, std::size_t j) {
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    if (i < j) left *= parties.cardinality(i);
    if (i > j) right *= parties.cardinality(i);
  }
  const auto l = static_cast<Eigen::Index>(left);
  const auto r = static_cast<Eigen::Index>(right);
  return kron(kron(CMatrix::Identity(l, l), op), CMatrix::Identity(r, r));
}

double completeness_defect(const std::vector<CMatrix>& ops, Eigen::Index in) {
  CMatrix sum = CMatrix::Zero(in, in);
  for (const auto& k : ops) sum += k.adjoint() * k;
  return (sum - CMatrix::Identity(in, in)).cwiseAbs().maxCoeff();
}

class QuantumEntropies {
 public:
  explicit QuantumEntropies(const DensityMatrix& rho) : rho_(rho) {}
  Bits operator()(PartyMask m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    const auto h = subsystem_entropy(rho_, m);
    memo_.emplace(m, h);
    return h;
  }

 private:
  const DensityMatrix& rho_;
  std::unordered_map<PartyMask, Bits> memo_;
};

void require_at_least_two(const DensityMatrix& rho) {
  if (rho.parties().size() < 2) throw InvalidArgument("monotone needs at least 2 parties");
}

}  // namespace

// --- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(PartySet parties, CMatrix matrix)
    : DensityMatrix(Trusted{}, std::move(parties), std::move(matrix), false) {}

DensityMatrix DensityMatrix::computed(PartySet parties, CMatrix matrix) {
  return DensityMatrix(Trusted{}, std::move(parties), std::move(matrix), true);
}

DensityMatrix::DensityMatrix(Trusted, PartySet parties, CMatrix matrix, bool internal)
    : parties_(std::move(parties)), matrix_(std::move(matrix)) {
  check_dimension(parties_);
  const auto d = static_cast<Eigen::Index>(parties_.total());
  if (matrix_.rows() != d || matrix_.cols() != d) {
    fail(internal, "density matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  if (!matrix_.allFinite()) fail(internal, "density matrix has non-finite entries");
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > tol::kState) {
    fail(internal, "density matrix is not Hermitian");
  }
  matrix_ = (matrix_ + matrix_.adjoint()) / 2.0;
  const double trace = matrix_.trace().real();
  if (std::abs(trace - 1.0) > tol::kState) {
    fail(internal, "density matrix has trace " + std::to_string(trace));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  spectrum_ = solver.eigenvalues();
  if (spectrum_.size() > 0 && spectrum_.minCoeff() < -tol::kState) {
    fail(internal, "density matrix has eigenvalue " + std::to_string(spectrum_.minCoeff()));
  }
  spectrum_ = spectrum_.cwiseMax(0.0);
}

DensityMatrix DensityMatrix::diagonal(const JointDistribution& dist) {
  const auto d = static_cast<Eigen::Index>(dist.table().size());
  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) m(i, i) = dist.table()[static_cast<std::size_t>(i)];
  return DensityMatrix(dist.parties(), std::move(m));
}

// --- PureState ---------------------------------------------------------------

PureState::PureState(PartySet parties, CVector amplitudes)
    : parties_(std::move(parties)), amplitudes_(std::move(amplitudes)) {
  check_dimension(parties_);
  if (static_cast<std::size_t>(amplitudes_.size()) != parties_.total()) {
    throw InvalidArgument("pure state has " + std::to_string(amplitudes_.size()) +
                          " amplitudes, expected " + std::to_string(parties_.total()));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > tol::kPureNorm) {
    throw InvalidArgument("pure state is not normalized");
  }
}

DensityMatrix PureState::density() const {
  return DensityMatrix::computed(parties_, amplitudes_ * amplitudes_.adjoint());
}

// --- KrausChannel ------------------------------------------------------------

KrausChannel::KrausChannel(std::vector<CMatrix> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw InvalidArgument("Kraus channel needs at least one operator");
  out_ = static_cast<std::size_t>(ops_.front().rows());
  in_ = static_cast<std::size_t>(ops_.front().cols());
  if (in_ == 0 || out_ == 0) throw InvalidArgument("Kraus operators must be nonempty");
  for (const auto& k : ops_) {
    if (static_cast<std::size_t>(k.rows()) != out_ || static_cast<std::size_t>(k.cols()) != in_) {
      throw InvalidArgument("Kraus operators differ in shape");
    }
  }
  if (completeness_defect(ops_, static_cast<Eigen::Index>(in_)) > tol::kState) {
    throw InvalidArgument("Kraus operators do not satisfy sum K^dagger K = I");
  }
}

KrausChannel KrausChannel::identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return KrausChannel({CMatrix::Identity(n, n)});
}

KrausChannel KrausChannel::dephasing(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<CMatrix> ops;
  for (Eigen::Index k = 0; k < n; ++k) {
    CMatrix p = CMatrix::Zero(n, n);
    p(k, k) = 1.0;
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::from_isometry(const CMatrix& isometry, std::size_t out_dim) {
  const auto rows = static_cast<std::size_t>(isometry.rows());
  if (out_dim == 0 || rows % out_dim != 0) {
    throw InvalidArgument("isometry rows are not a multiple of the output dimension");
  }
  const auto env = static_cast<Eigen::Index>(rows / out_dim);
  const auto out = static_cast<Eigen::Index>(out_dim);
  std::vector<CMatrix> ops;
  for (Eigen::Index e = 0; e < env; ++e) {
    CMatrix k(out, isometry.cols());
    for (Eigen::Index o = 0; o < out; ++o) k.row(o) = isometry.row(o * env + e);
    ops.push_back(std::move(k));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel KrausChannel::from_unitary_dilation(const CMatrix& unitary, std::size_t in_dim,
                                                 std::size_t aux_dim, std::size_t out_dim) {
  const auto n = static_cast<Eigen::Index>(in_dim * aux_dim);
  if (unitary.rows() != n || unitary.cols() != n) {
    throw InvalidArgument("dilation unitary must act on system (x) ancilla");
  }
  if ((unitary.adjoint() * unitary - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > tol::kState) {
    throw InvalidArgument("dilation matrix is not unitary");
  }
  // Columns with the ancilla in |0>.
  CMatrix v(n, static_cast<Eigen::Index>(in_dim));
  for (std::size_t i = 0; i < in_dim; ++i) {
    v.col(static_cast<Eigen::Index>(i)) = unitary.col(static_cast<Eigen::Index>(i * aux_dim));
  }
  return from_isometry(v, out_dim);
}

// --- Instrument / QuantumEnsemble ---------------------------------------------

Instrument::Instrument(std::vector<std::pair<std::string, CMatrix>> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw InvalidArgument("instrument needs at least one outcome");
  dim_ = static_cast<std::size_t>(outcomes_.front().second.cols());
  std::vector<CMatrix> ops;
  for (const auto& [label, m] : outcomes_) {
    if (m.rows() != m.cols() || static_cast<std::size_t>(m.cols()) != dim_) {
      throw InvalidArgument("instrument operators must be square of one dimension");
    }
    ops.push_back(m);
  }
  if (completeness_defect(ops, static_cast<Eigen::Index>(dim_)) > tol::kState) {
    throw InvalidArgument("instrument operators do not satisfy sum M^dagger M = I");
  }
}

Instrument Instrument::trivial(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return Instrument({{"1", CMatrix::Identity(n, n)}});
}

Instrument Instrument::projective(const CMatrix& basis) {
  if (orthonormality_defect(basis) > tol::kState) {
    throw InvalidArgument("projective measurement needs an orthonormal basis");
  }
  std::vector<std::pair<std::string, CMatrix>> out;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    out.emplace_back(std::to_string(k), basis.col(k) * basis.col(k).adjoint());
  }
  return Instrument(std::move(out));
}

QuantumEnsemble::QuantumEnsemble(std::vector<QuantumMember> members) {
  double sum = 0.0;
  for (auto& m : members) {
    if (!(m.weight >= 0.0)) throw InvalidArgument("ensemble weight must be >= 0");
    if (m.weight == 0.0) continue;
    sum += m.weight;
    members_.push_back(std::move(m));
  }
  if (members_.empty()) throw InvalidArgument("ensemble has no member with positive weight");
  if (std::abs(sum - 1.0) > tol::kInputProbability) {
    throw InvalidArgument("ensemble weights sum to " + std::to_string(sum));
  }
}

// --- entropies and monotones --------------------------------------------------

DensityMatrix partial_trace(const DensityMatrix& rho, PartyMask keep) {
  const auto& ps = rho.parties();
  keep &= ps.all();
  if (keep == 0) throw InvalidArgument("partial trace needs a nonempty set of parties");
  if (keep == ps.all()) return rho;
  return DensityMatrix::computed(ps.restrict_to(keep),
                                 kernels::partial_trace(rho.matrix(), ps.cardinalities(), keep));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::string>& keep) {
  if (keep.empty()) throw InvalidArgument("partial trace needs a nonempty set of parties");
  return partial_trace(rho, rho.parties().mask_of(keep));
}

Bits von_neumann_entropy(const DensityMatrix& rho) {
  Bits h = 0.0;
  for (Eigen::Index i = 0; i < rho.spectrum().size(); ++i) {
    const double l = rho.spectrum()(i);
    if (l > 0.0) h -= l * std::log2(l);
  }
  return h;
}

Bits subsystem_entropy(const DensityMatrix& rho, PartyMask subset) {
  if (subset & ~rho.parties().all()) throw InvalidArgument("subset names an unknown party");
  if (subset == 0) return 0.0;
  return von_neumann_entropy(partial_trace(rho, subset));
}

Bits q_s_n(const DensityMatrix& rho, SnForm form) {
  require_at_least_two(rho);
  QuantumEntropies h(rho);
  const auto n = rho.parties().size();
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

Bits q_t_n(const DensityMatrix& rho, TnForm form) {
  require_at_least_two(rho);
  QuantumEntropies h(rho);
  const auto n = rho.parties().size();
  switch (form) {
    case TnForm::definition:
      return formulas::t_n_definition(n, h);
    case TnForm::chain:
      return formulas::t_n_chain(n, h);
    case TnForm::relative_entropy:
      break;
  }
  throw InvalidArgument("quantum T_n has no relative-entropy evaluation here");
}

Bits q_sum_of_single_cuts(const DensityMatrix& rho) {
  require_at_least_two(rho);
  QuantumEntropies h(rho);
  return formulas::sum_of_single_cuts(rho.parties().size(), h);
}

Bits q_conditional_mutual_information(const DensityMatrix& rho, PartyMask x, PartyMask y,
                                      PartyMask z) {
  if ((x & y) || (x & z) || (y & z)) throw InvalidArgument("party subsets must be disjoint");
  QuantumEntropies h(rho);
  return formulas::cmi(h, x, y, z);
}

// --- operations ---------------------------------------------------------------

DensityMatrix apply_local_channel(const DensityMatrix& rho, const std::string& party,
                                  const KrausChannel& channel) {
  const auto& ps = rho.parties();
  const auto j = ps.index_of(party);
  if (channel.in_dim() != ps.cardinality(j)) {
    throw InvalidArgument("channel expects dimension " + std::to_string(channel.in_dim()) +
                          " but party '" + party + "' has " +
                          std::to_string(ps.cardinality(j)));
  }
  auto out_ps = ps.with_cardinality(j, channel.out_dim());
  check_dimension(out_ps);
  const auto d = static_cast<Eigen::Index>(out_ps.total());
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& k : channel.operators()) {
    const CMatrix f = embed(k, ps, j);
    out += f * rho.matrix() * f.adjoint();
  }
  return DensityMatrix::computed(std::move(out_ps), std::move(out));
}

QuantumEnsemble measure_and_announce(const DensityMatrix& rho, const std::string& party,
                                     const Instrument& instrument) {
  const auto& ps = rho.parties();
  const auto j = ps.index_of(party);
  if (instrument.dim() != ps.cardinality(j)) {
    throw InvalidArgument("instrument has dimension " + std::to_string(instrument.dim()) +
                          " but party '" + party + "' has " +
                          std::to_string(ps.cardinality(j)));
  }
  // Outcomes below this probability are treated as impossible.
  constexpr double kZeroOutcome = 1e-14;
  std::vector<QuantumMember> members;
  for (const auto& [label, m] : instrument.outcomes()) {
    const CMatrix f = embed(m, ps, j);
    CMatrix sigma = f * rho.matrix() * f.adjoint();
    const double p = sigma.trace().real();
    if (p <= kZeroOutcome) continue;
    sigma /= p;
    members.push_back({p, DensityMatrix::computed(ps, std::move(sigma)), label});
  }
  return QuantumEnsemble(std::move(members));
}

JointDistribution measure_all(const DensityMatrix& rho, const std::vector<CMatrix>& bases) {
  const auto& ps = rho.parties();
  if (bases.size() != ps.size()) throw InvalidArgument("need one basis per party");
  CMatrix u = CMatrix::Identity(1, 1);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto d = static_cast<Eigen::Index>(ps.cardinality(i));
    if (bases[i].rows() != d || bases[i].cols() != d) {
      throw InvalidArgument("basis for party '" + ps.label(i) + "' must be " +
                            std::to_string(d) + "x" + std::to_string(d));
    }
    if (orthonormality_defect(bases[i]) > tol::kState) {
      throw InvalidArgument("basis for party '" + ps.label(i) + "' is not orthonormal");
    }
    u = kron(u, bases[i]);
  }
  const CMatrix rotated = u.adjoint() * rho.matrix() * u;
  std::vector<double> t(ps.total());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    t[k] = rotated(i, i).real();
  }
  return JointDistribution::computed(ps, std::move(t));
}

Bits pure_state_monotone(const PureState& psi) {
  if (psi.parties().size() < 2) throw InvalidArgument("monotone needs at least 2 parties");
  const auto rho = psi.density();
  Bits sum = 0.0;
  for (std::size_t i = 0; i < psi.parties().size(); ++i) sum += subsystem_entropy(rho, bit(i));
  const auto s = q_s_n(rho);
  const auto t = q_t_n(rho);
  if (std::abs(s - sum) > tol::kBits || std::abs(t - sum) > tol::kBits) {
    throw InternalError("pure-state S_n/T_n differ from the sum of local entropies");
  }
  return sum;
}

SumHalving sum_halving_bound(const PureState& psi, const JointDistribution& target) {
  if (psi.parties().labels() != target.parties().labels()) {
    throw InvalidArgument("state and distribution must share party labels");
  }
  SumHalving r;
  r.bound = pure_state_monotone(psi);
  r.s_plus_t = s_n(target) + t_n(target);
  r.satisfied = r.s_plus_t <= r.bound + tol::kBits;
  return r;
}

PureState ghz(std::size_t n) {
  if (n < 2) throw InvalidArgument("GHZ state needs at least 2 parties");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('A' + i));
  PartySet ps(std::move(labels), std::vector<std::size_t>(n, 2));
  CVector amp = CVector::Zero(static_cast<Eigen::Index>(ps.total()));
  amp(0) = std::numbers::sqrt2 / 2.0;
  amp(amp.size() - 1) = std::numbers::sqrt2 / 2.0;
  return PureState(std::move(ps), std::move(amp));
}

CMatrix basis_z(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return CMatrix::Identity(n, n);
}

CMatrix basis_x(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (d == 2) {
        // Exact +-1 entries for qubits.
        f(j, k) = (j * k) % 2 == 0 ? norm : -norm;
      } else {
        f(j, k) = std::polar(norm, 2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                       static_cast<double>(d));
      }
    }
  }
  return f;
}

CMatrix basis_y() {
  const double s = std::numbers::sqrt2 / 2.0;
  CMatrix b(2, 2);
  b << cd(s, 0), cd(s, 0), cd(0, s), cd(0, -s);
  return b;
}

CMatrix basis_by_name(const std::string& name, std::size_t d) {
  if (name == "z") return basis_z(d);
  if (name == "x") return basis_x(d);
  if (name == "y") {
    if (d != 2) throw InvalidArgument("the y basis is defined for qubits only");
    return basis_y();
  }
  throw InvalidArgument("unknown basis '" + name + "' (expected z, x or y)");
}

double orthonormality_defect(const CMatrix& basis) {
  const auto n = basis.cols();
  return (basis.adjoint() * basis - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

// --- random instances -----------------------------------------------------------

namespace qrnd {

CMatrix gaussian(rnd::Engine& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index c = 0; c < g.cols(); ++c) {
    for (Eigen::Index r = 0; r < g.rows(); ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = cd(re, im);
    }
  }
  return g;
}

CMatrix unitary(rnd::Engine& rng, std::size_t d) {
  const CMatrix g = gaussian(rng, d, d);
  Eigen::HouseholderQR<CMatrix> qr(g);
  const auto n = static_cast<Eigen::Index>(d);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const cd diag = r(k, k);
    if (std::abs(diag) > 0.0) q.col(k) *= diag / std::abs(diag);
  }
  return q;
}

PureState pure_state(rnd::Engine& rng, const PartySet& parties) {
  check_dimension(parties);
  CVector v = gaussian(rng, parties.total(), 1).col(0);
  v.normalize();
  return PureState(parties, std::move(v));
}

DensityMatrix mixed_state(rnd::Engine& rng, const PartySet& parties) {
  check_dimension(parties);
  const CMatrix g = gaussian(rng, parties.total(), parties.total());
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::computed(parties, std::move(rho));
}

KrausChannel channel(rnd::Engine& rng, std::size_t in, std::size_t out, std::size_t kraus_count) {
  const auto big = out * kraus_count;
  if (big < in) throw InvalidArgument("isometry needs out * kraus_count >= in");
  const CMatrix u = unitary(rng, big);
  return KrausChannel::from_isometry(u.leftCols(static_cast<Eigen::Index>(in)), out);
}

Instrument instrument(rnd::Engine& rng, std::size_t d, std::size_t outcomes) {
  const auto ops = channel(rng, d, d, outcomes).operators();
  std::vector<std::pair<std::string, CMatrix>> labeled;
  for (std::size_t k = 0; k < ops.size(); ++k) labeled.emplace_back(std::to_string(k), ops[k]);
  return Instrument(std::move(labeled));
}

}  // namespace qrnd

}  // namespace secmon
