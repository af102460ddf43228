#pragma once

// Oscillator-basis realization of the noncommutative Landau problem.
//
// Operators are kept as sums c (A (x) B) of single-mode matrices built in a
// padded basis of size N + pad. Products are formed there and truncated only
// when a dense N^2 x N^2 matrix is assembled, so assembled polynomial
// operators of degree <= pad + 1 are exact compressions P H P. Basis state
// (i, j) has flat index i*N + j (x mode major).

#include "nclandau/eigen.hpp"
#include "nclandau/params.hpp"

#include <string>
#include <vector>

namespace nclandau {

struct OscBasis {
  int n_per_mode = 12;
  double length_scale = 1.0;
  double hbar = 1.0;
  int pad = 4;

  /// Basis with the cyclotron length sqrt(hbar/|eB|) (1 when eB = 0).
  static OscBasis cyclotron(const PlaneParams& p, int n_per_mode);
  void validate() const;
  std::size_t dim() const { return static_cast<std::size_t>(n_per_mode) * static_cast<std::size_t>(n_per_mode); }
  std::size_t padded() const { return static_cast<std::size_t>(n_per_mode + pad); }
};

/// Unit-norm state in the N^2-dimensional product basis.
class StateVector {
public:
  /// Normalizes v; throws std::invalid_argument for the zero vector.
  explicit StateVector(std::vector<cplx> v);
  static StateVector basis_state(const OscBasis& b, int i, int j);

  const std::vector<cplx>& amplitudes() const { return v_; }
  std::size_t dim() const { return v_.size(); }
  double norm() const;

private:
  std::vector<cplx> v_;
};

/// <psi| M |psi>.
cplx expectation(const OperatorMatrix& m, const StateVector& psi);

/// Dense square single-mode matrix.
class ModeMatrix {
public:
  ModeMatrix() = default;
  explicit ModeMatrix(std::size_t n) : n_(n), data_(n * n, cplx(0.0, 0.0)) {}
  static ModeMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const cplx* row(std::size_t i) const { return data_.data() + i * n_; }

  ModeMatrix adjoint() const;
  ModeMatrix truncated(std::size_t n) const;
  friend ModeMatrix operator*(const ModeMatrix& a, const ModeMatrix& b);
  friend bool operator==(const ModeMatrix& a, const ModeMatrix& b) { return a.data_ == b.data_; }

private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

/// x = (l/sqrt2)(a + a^dagger), p = (i hbar/(l sqrt2))(a^dagger - a) on one mode.
struct ModeOperators {
  ModeMatrix position;
  ModeMatrix momentum;
  ModeMatrix one;
};
ModeOperators mode_operators(std::size_t n, double length_scale, double hbar);

class KronOperator {
public:
  struct Term {
    cplx coeff;
    ModeMatrix x_factor;
    ModeMatrix y_factor;
  };

  KronOperator() = default;
  explicit KronOperator(std::size_t factor_size) : size_(factor_size) {}
  static KronOperator term(cplx c, ModeMatrix a, ModeMatrix b);

  std::size_t factor_size() const { return size_; }
  const std::vector<Term>& terms() const { return terms_; }

  KronOperator& operator+=(const KronOperator& o);
  KronOperator& operator-=(const KronOperator& o);
  KronOperator& operator*=(cplx s);
  friend KronOperator operator+(KronOperator a, const KronOperator& b) { return a += b; }
  friend KronOperator operator-(KronOperator a, const KronOperator& b) { return a -= b; }
  friend KronOperator operator*(KronOperator a, cplx s) { return a *= s; }
  friend KronOperator operator*(cplx s, KronOperator a) { return a *= s; }
  friend KronOperator operator*(const KronOperator& a, const KronOperator& b);

  KronOperator adjoint() const;
  /// Truncates every factor to its top-left n x n block.
  KronOperator truncated(std::size_t n) const;
  /// Dense matrix on the first n states of each mode (flat index i*n + j).
  OperatorMatrix to_dense(std::size_t n) const;

private:
  std::size_t size_ = 0;
  std::vector<Term> terms_;
};

struct BasisOperators {
  KronOperator x, y, px, py, one;
};

/// Phase-space generators on the padded basis.
BasisOperators basis_operators(const OscBasis& b);

struct BasisMatrices {
  OperatorMatrix x, y, px, py;
};
BasisMatrices basis_matrices(const OscBasis& b);

struct MinimalCouplingOperators {
  KronOperator X, Y, Pi_x, Pi_y;
};
/// X^r = x + (r-1) theta p_y/hbar, Y^r = y + r theta p_x/hbar and the
/// radical-coefficient kinematic momenta.
MinimalCouplingOperators minimal_coupling_operators(const PlaneParams& p, const OscBasis& b);

struct MinimalCouplingMatrices {
  OperatorMatrix X, Y, Pi_x, Pi_y;
};
MinimalCouplingMatrices minimal_coupling_matrices(const PlaneParams& p, const OscBasis& b);

/// Substitutes multiplication by x, y and d -> (i/hbar) p, coefficient first.
KronOperator operator_from_diff(const DiffOperator<GaussianRational>& d, const OscBasis& b);
KronOperator operator_from_diff(const DiffOperator<HPComplex>& d, const OscBasis& b);

enum class HamiltonianRoute { star_action, reduced };

/// Kinematic momenta of the chosen route: p - e Op(A *r .) or p - e* A.
std::pair<KronOperator, KronOperator> kinematic_momenta(const PlaneParams& p, const OscBasis& b, HamiltonianRoute route);
KronOperator deformed_hamiltonian_operator(const PlaneParams& p, const OscBasis& b, HamiltonianRoute route);
/// Dense, Hermitian-tagged compression of the deformed Hamiltonian.
OperatorMatrix deformed_hamiltonian(const PlaneParams& p, const OscBasis& b, HamiltonianRoute route);

/// Rows/columns whose x and y mode indices are both < limit.
std::vector<std::size_t> interior_indices(int n_per_mode, int limit);
/// max |A_ij - B_ij| over the interior block.
double interior_difference(const OperatorMatrix& a, const OperatorMatrix& b, const std::vector<std::size_t>& idx);
/// [A, B] of the factor-truncated operators, assembled densely.
OperatorMatrix truncated_commutator(const KronOperator& a, const KronOperator& b, std::size_t n);

struct LandauSpectrumReport {
  double e0_estimate = 0;
  double e0_analytic = 0;
  double rel_err = 0;
  double ladder_residual = 0;       // H vs hbar omega (b^dagger b + 1/2), interior
  double ladder_commutator = 0;     // [b, b^dagger] vs 1, interior
  double route_difference = 0;      // star-action vs reduced, all entries
  double hermiticity_residual = 0;  // before tagging
  bool ladder_defined = false;      // false when e* B-bar = 0
  std::vector<double> lowest;
  int near_ground_count = 0;        // eigenvalues within 0.1 hbar omega of E_0 (diagnostic)
};

LandauSpectrumReport landau_spectrum_check(const PlaneParams& p, const OscBasis& b, int n_levels);

struct NaiveSpectrumReport {
  double scale_estimate = 0;  // interior [Pi_x, Pi_y] / (i e hbar B), averaged over the diagonal
  double scale_spread = 0;    // max deviation of the interior commutator from scale_estimate * i e hbar B
  double scale_analytic = 0;
  double e0_estimate = 0;
  double e0_analytic = 0;     // hbar |e B scale| / (2m)
  double spacing_estimate = 0;
};

NaiveSpectrumReport naive_spectrum_check(const PlaneParams& p, const OscBasis& b);

/// CSV header and row: r, theta, N, E0_estimate, E0_analytic, rel_err, ladder_residual.
std::string spectrum_csv_header();
std::string spectrum_csv_row(const PlaneParams& p, const OscBasis& b, const LandauSpectrumReport& rep);

}  // namespace nclandau
