#include "nclandau/theta_series.hpp"

#include <stdexcept>

namespace nclandau {

namespace {

void require_same_order(const ThetaSeries& a, const ThetaSeries& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": series order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}

}  // namespace

ThetaSeries::ThetaSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

ThetaSeries::ThetaSeries(int order, const ConfigPoly& constant_part) : ThetaSeries(order) {
  coeffs_[0] = constant_part;
}

ThetaSeries ThetaSeries::theta(int order) {
  ThetaSeries s(order);
  if (order >= 1) s.coeffs_[1] = ConfigPoly::constant(GaussianRational(1));
  return s;
}

const ConfigPoly& ThetaSeries::extract(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("theta power " + std::to_string(k) + " outside 0.." + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(k)];
}

void ThetaSeries::set(int k, ConfigPoly p) {
  if (k < 0 || k > order())
    throw std::out_of_range("theta power " + std::to_string(k) + " outside 0.." + std::to_string(order()));
  coeffs_[static_cast<std::size_t>(k)] = std::move(p);
}

bool ThetaSeries::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

ThetaSeries& ThetaSeries::operator+=(const ThetaSeries& o) {
  require_same_order(*this, o, "series add");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

ThetaSeries& ThetaSeries::operator-=(const ThetaSeries& o) {
  require_same_order(*this, o, "series sub");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

ThetaSeries& ThetaSeries::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ThetaSeries ThetaSeries::derivative(std::size_t var) const {
  ThetaSeries out(order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k].derivative(var);
  return out;
}

ThetaSeries ThetaSeries::times(const ConfigPoly& p) const {
  ThetaSeries out(order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * p;
  return out;
}

ThetaSeries ThetaSeries::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative theta shift");
  ThetaSeries out(order());
  for (int j = 0; j + k <= order(); ++j) out.coeffs_[static_cast<std::size_t>(j + k)] = coeffs_[static_cast<std::size_t>(j)];
  return out;
}

std::string ThetaSeries::to_string() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0)
      out += c.to_string();
    else
      out += "(" + c.to_string() + ")*t" + (k > 1 ? "^" + std::to_string(k) : "");
  }
  return out.empty() ? "0" : out;
}

ThetaSeries series_mul(const ThetaSeries& a, const ThetaSeries& b) {
  require_same_order(a, b, "series mul");
  const int K = a.order();
  ThetaSeries out(K);
  for (int i = 0; i <= K; ++i) {
    if (a.extract(i).is_zero()) continue;
    for (int j = 0; i + j <= K; ++j) {
      if (b.extract(j).is_zero()) continue;
      ConfigPoly acc = out.extract(i + j);
      acc += a.extract(i) * b.extract(j);
      out.set(i + j, std::move(acc));
    }
  }
  return out;
}

ThetaSeries series_binomial_power(const ThetaSeries& u, const Rational& p) {
  if (!u.extract(0).is_zero())
    throw std::invalid_argument("binomial power needs a series with zero constant term");
  const int K = u.order();
  ThetaSeries result(K, ConfigPoly::constant(GaussianRational(1)));
  ThetaSeries u_power(K, ConfigPoly::constant(GaussianRational(1)));
  Rational binom(1);
  // u^k = O(theta^k), so k <= K terms suffice.
  for (int k = 1; k <= K; ++k) {
    binom = binom * (p - (k - 1)) / k;
    u_power = series_mul(u_power, u);
    result += u_power * GaussianRational(binom);
  }
  return result;
}

ThetaSeries series_star_product(const ThetaSeries& a, const ThetaSeries& b, const Rational& r) {
  require_same_order(a, b, "series star product");
  const int K = a.order();
  // Unit theta: the weights carry the formal theta powers via the index shift.
  const StarContext unit{r, Rational(1), Rational(1), Rational(1)};
  ThetaSeries out(K);
  for (int i = 0; i <= K; ++i) {
    const ConfigPoly& f = a.extract(i);
    if (f.is_zero()) continue;
    for (int j = 0; i + j <= K; ++j) {
      const ConfigPoly& g = b.extract(j);
      if (g.is_zero()) continue;
      const int budget = K - i - j;
      for (int m = 0; m <= budget; ++m) {
        for (int n = 0; m + n <= budget; ++n) {
          GaussianRational w = detail::bidiff_weight(unit, static_cast<unsigned>(m), static_cast<unsigned>(n));
          if (w.is_zero()) continue;
          ConfigPoly lhs = f.derivative({static_cast<unsigned>(m), static_cast<unsigned>(n)});
          if (lhs.is_zero()) continue;
          ConfigPoly rhs = g.derivative({static_cast<unsigned>(n), static_cast<unsigned>(m)});
          if (rhs.is_zero()) continue;
          const int k = i + j + m + n;
          ConfigPoly acc = out.extract(k);
          acc += (lhs * rhs) * w;
          out.set(k, std::move(acc));
        }
      }
    }
  }
  return out;
}

ThetaSeries series_star_commutator(const ThetaSeries& a, const ThetaSeries& b, const Rational& r) {
  return series_star_product(a, b, r) - series_star_product(b, a, r);
}

}  // namespace nclandau
