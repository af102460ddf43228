#pragma once

// Dense complex matrices and Hermitian eigensolvers.
//
// hermitian_eigenvalues splits the matrix into the connected components of
// its nonzero pattern, then runs Householder tridiagonalization with implicit
// QL on large blocks and cyclic Jacobi on small ones. jacobi_eigensystem also
// returns eigenvectors and serves as the reference solver.

#include <complex>
#include <cstddef>
#include <vector>

namespace nclandau {

using cplx = std::complex<double>;

class OperatorMatrix {
public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, cplx(0.0, 0.0)) {}

  static OperatorMatrix identity(std::size_t dim);
  static OperatorMatrix diagonal(const std::vector<double>& d);

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  cplx* row(std::size_t i) { return data_.data() + i * dim_; }
  const cplx* row(std::size_t i) const { return data_.data() + i * dim_; }
  std::vector<cplx>& data() { return data_; }
  const std::vector<cplx>& data() const { return data_; }

  bool hermitian() const { return hermitian_; }
  /// max |M - M^dagger| over all entries.
  double hermiticity_residual() const;
  /// Tags the matrix Hermitian after checking the residual against tol, then
  /// replaces M by (M + M^dagger)/2 so the tag holds exactly. Throws
  /// std::domain_error when the residual exceeds tol.
  void tag_hermitian(double tol = 1e-12);

  OperatorMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;

  OperatorMatrix& operator+=(const OperatorMatrix& o);
  OperatorMatrix& operator-=(const OperatorMatrix& o);
  OperatorMatrix& operator*=(cplx s);
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(OperatorMatrix a, cplx s) { return a *= s; }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);

  std::vector<cplx> apply(const std::vector<cplx>& v) const;

private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
  bool hermitian_ = false;
};

/// max |a - b| over all entries.
double max_abs_difference(const OperatorMatrix& a, const OperatorMatrix& b);

struct EigenSystem {
  std::vector<double> values;             // ascending
  std::vector<std::vector<cplx>> vectors; // vectors[k] pairs with values[k], unit norm
};

/// Cyclic complex Jacobi with eigenvectors. Requires a Hermitian-tagged matrix.
EigenSystem jacobi_eigensystem(const OperatorMatrix& m);

/// Eigenvalues of a Hermitian-tagged matrix via Householder + implicit QL
/// (no block splitting).
std::vector<double> householder_eigenvalues(const OperatorMatrix& m);

/// Block-split eigenvalues, ascending. Throws std::invalid_argument for
/// matrices not tagged Hermitian.
std::vector<double> hermitian_eigenvalues(const OperatorMatrix& m);

/// Connected components of the nonzero pattern, each sorted ascending.
std::vector<std::vector<std::size_t>> block_components(const OperatorMatrix& m);

/// max_k |M v_k - lambda_k v_k|.
double reconstruction_residual(const OperatorMatrix& m, const EigenSystem& es);

}  // namespace nclandau
