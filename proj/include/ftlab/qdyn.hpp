#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftlab/linalg.hpp"

namespace ftlab {

/// Default validation tolerances. All overridable per call.
struct Tolerances {
  double herm = 1e-10;
  double trace = 1e-10;
  double psd = 1e-9;
  double complete = 1e-10;
  double detailed_balance = 1e-12;
};

struct DensityCheckReport {
  double herm_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
  bool hermitian = false;
  bool unit_trace = false;
  bool psd = false;
  bool pass() const { return hermitian && unit_trace && psd; }
};

/// Hermitian, unit-trace, PSD state. Construction validates; `unchecked`
/// skips validation for states produced by already-validated arithmetic.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m, const Tolerances& tol = {});
  static DensityMatrix unchecked(Matrix m);

  const Matrix& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

 private:
  DensityMatrix() = default;
  Matrix mat_;
};

DensityCheckReport validate_density(const Matrix& rho, const Tolerances& tol = {});
inline DensityCheckReport validate_density(const DensityMatrix& rho,
                                           const Tolerances& tol = {}) {
  return validate_density(rho.mat(), tol);
}

/// Eigendecomposition of a density matrix with deterministic label order:
/// probabilities descending, ties broken by fixing the phase of each
/// eigenvector (first component of magnitude > 1e-12 made real positive).
/// Labels are the indices into `probs`/`vecs` columns.
struct SpectralState {
  Matrix rho;
  RealVector probs;
  Matrix vecs;  // column k is the eigenvector for label k

  int dim() const { return static_cast<int>(rho.rows()); }
  Vector eigenvector(int label) const { return vecs.col(label); }
};

SpectralState spectral_decompose(const DensityMatrix& rho);

/// Labeled Kraus family {M(y)} with completeness sum_y M†M = I.
class KrausSet {
 public:
  KrausSet(std::vector<std::string> outcomes, std::vector<Matrix> ops,
           const Tolerances& tol = {});

  int dim() const { return static_cast<int>(ops_[0].rows()); }
  std::size_t size() const { return ops_.size(); }
  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const Matrix& op(std::size_t y) const { return ops_[y]; }
  const std::vector<Matrix>& ops() const { return ops_; }
  double completeness_residual() const;

 private:
  std::vector<std::string> outcomes_;
  std::vector<Matrix> ops_;
};

struct KrausApplyResult {
  double probability = 0.0;
  bool zero_branch = false;               // probability at or below the floor
  std::optional<DensityMatrix> state;     // unset on zero branches
};

/// POVM update: returns (M(y) rho M†(y) / p, p) with p = Tr[M†M rho].
/// Branches with p <= p_floor are flagged, never silently renormalized.
KrausApplyResult apply_kraus(const DensityMatrix& rho, const KrausSet& kraus,
                             std::size_t y, double p_floor = 1e-14);

/// Dissipative channel with local detailed balance. The partner channel
/// satisfies L_partner = L† e^{-beta q / 2} and carries heat -q.
struct JumpChannel {
  std::string label;
  Matrix op;
  double heat = 0.0;  // energy released to the reservoir per jump
  std::string partner;
};

struct DetailedBalanceReport {
  double max_residual = 0.0;
  bool paired = false;   // every channel's partner label resolves
  bool pass = false;
};

DetailedBalanceReport check_detailed_balance(std::span<const JumpChannel> channels,
                                             double beta,
                                             const Tolerances& tol = {});

/// Antiunitary time reversal as complex conjugation in the fixed
/// computational basis. Protocols whose operators are not real in this
/// basis must opt in explicitly at load time.
struct TimeReversal {
  Matrix apply(const Matrix& op) const { return op.conjugate(); }
  Vector apply(const Vector& v) const { return v.conjugate(); }
};

inline Matrix time_reverse(const Matrix& op, const TimeReversal& theta = {}) {
  return theta.apply(op);
}

/// H - (i/2) sum_j L†L - (i/2) rate * sum_y M†M (last term only when a
/// monitored set is present).
Matrix effective_hamiltonian(const Matrix& h, std::span<const JumpChannel> jumps,
                             const KrausSet* monitored = nullptr,
                             double monitor_rate = 0.0);

/// Applies exp(-i H_eff dt) to a pure state. With an anti-Hermitian part
/// that is negative semidefinite the norm must not grow; growth beyond
/// norm_tol signals a misused integrator and throws.
Vector evolve_nonhermitian(const Vector& psi, const Matrix& h_eff, double dt,
                           double norm_tol = 1e-9);
Matrix evolve_nonhermitian(const Matrix& rho, const Matrix& h_eff, double dt,
                           double norm_tol = 1e-9);

/// -sum_i lambda_i ln lambda_i with 0 ln 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const Matrix& rho);

/// Gibbs state e^{-beta H}/Z with the spectrum exponent-shifted so that
/// arbitrarily large beta degrades gracefully to the ground-state projector.
SpectralState thermal_state(const Matrix& h, double beta);

/// Time-ordered product prod_k exp(-i H_k dt) (first segment acts first).
Matrix schedule_unitary(std::span<const Matrix> segments, double dt);

/// The same schedule run backward under time reversal:
/// prod_k exp(-i Theta H_{N+1-k} Theta^{-1} dt). Microreversibility gives
/// Theta^{-1} U_bar Theta = U†.
Matrix reversed_schedule_unitary(std::span<const Matrix> segments, double dt,
                                 const TimeReversal& theta = {});

}  // namespace ftlab
