#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ftlab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Raised when an input document or parameter set is invalid.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a numerical routine detects it is being misused
/// (e.g. a nominally contractive step increases the norm).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

inline Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

inline double frobenius(const Matrix& m) { return m.norm(); }

inline double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).norm();
}

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

/// Largest |imaginary part| over all entries; used to detect operators that
/// are not real in the computational basis.
inline double max_imag(const Matrix& m) {
  return m.imag().cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b);

/// vec(rho) with column stacking, so that vec(A rho B) = (B^T ⊗ A) vec(rho).
Vector vectorize(const Matrix& rho);
Matrix devectorize(const Vector& v, int dim);

/// Superoperator matrix of rho -> A rho B.
Matrix sandwich_superop(const Matrix& a, const Matrix& b);

/// General matrix exponential (scaling-and-squaring Padé).
Matrix expm(const Matrix& a);

/// exp(-i t H) for Hermitian H, via eigendecomposition (unitary to roundoff).
Matrix expm_i_hermitian(const Matrix& h, double t);

/// Principal square root of a Hermitian positive semidefinite matrix.
/// Negative eigenvalues beyond -tol are an error; small negatives clip to 0.
Matrix sqrtm_psd(const Matrix& a, double tol = 1e-12);

// Qubit operators in the fixed basis order (|0> ground, |1> excited).
// sigma_z is diag(-1, +1) so that H = (omega/2) sigma_z gives |1> the
// higher energy; sigma_minus = |0><1| lowers the excited state.
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix sigma_minus();
Matrix sigma_plus();
Vector basis_state(int dim, int k);

}  // namespace ftlab
