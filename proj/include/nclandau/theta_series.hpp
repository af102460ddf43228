#pragma once

// Truncated formal power series in theta with ConfigPoly coefficients.
// The truncation order K is fixed at construction; binary operations demand
// equal orders and never touch powers above K.

#include "nclandau/star.hpp"

#include <string>
#include <vector>

namespace nclandau {

class ThetaSeries {
public:
  explicit ThetaSeries(int order);
  ThetaSeries(int order, const ConfigPoly& constant_part);

  /// theta^1 as a series (zero when order == 0).
  static ThetaSeries theta(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ConfigPoly>& coefficients() const { return coeffs_; }

  /// Coefficient of theta^k; throws std::out_of_range unless 0 <= k <= order.
  const ConfigPoly& extract(int k) const;
  void set(int k, ConfigPoly p);

  bool is_zero() const;

  ThetaSeries& operator+=(const ThetaSeries& o);
  ThetaSeries& operator-=(const ThetaSeries& o);
  ThetaSeries& operator*=(const GaussianRational& s);
  friend ThetaSeries operator+(ThetaSeries a, const ThetaSeries& b) { return a += b; }
  friend ThetaSeries operator-(ThetaSeries a, const ThetaSeries& b) { return a -= b; }
  friend ThetaSeries operator-(ThetaSeries a) { return a *= GaussianRational(-1); }
  friend ThetaSeries operator*(ThetaSeries a, const GaussianRational& s) { return a *= s; }
  friend ThetaSeries operator*(const GaussianRational& s, ThetaSeries a) { return a *= s; }
  friend bool operator==(const ThetaSeries& a, const ThetaSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Coefficientwise partial derivative in x (var 0) or y (var 1).
  ThetaSeries derivative(std::size_t var) const;

  /// Multiplies every coefficient pointwise by a theta-independent polynomial.
  ThetaSeries times(const ConfigPoly& p) const;

  /// Multiplies by theta^k, dropping anything pushed above the order.
  ThetaSeries shifted(int k) const;

  /// `P0 + (P1)*t + (P2)*t^2`; zero coefficients are omitted.
  std::string to_string() const;

private:
  std::vector<ConfigPoly> coeffs_;
};

/// Cauchy product truncated at the common order.
ThetaSeries series_mul(const ThetaSeries& a, const ThetaSeries& b);

/// (1 + u)^p as a truncated binomial series; u must have zero constant term.
ThetaSeries series_binomial_power(const ThetaSeries& u, const Rational& p);

/// Star product with theta kept formal: bidifferential order m+n contributes
/// at theta^(m+n) with weight (-i(r-1))^m (-i r)^n / (m! n!).
ThetaSeries series_star_product(const ThetaSeries& a, const ThetaSeries& b, const Rational& r);
ThetaSeries series_star_commutator(const ThetaSeries& a, const ThetaSeries& b, const Rational& r);

/// Coefficient of theta^k; same contract as ThetaSeries::extract.
inline ConfigPoly series_extract(const ThetaSeries& a, int k) { return a.extract(k); }

}  // namespace nclandau
