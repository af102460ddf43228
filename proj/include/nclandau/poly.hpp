#pragma once

// Sparse commutative polynomials with coefficients in a CoeffField.
// ConfigPoly lives in (x, y); PhasePoly in (x, y, px, py).

#include "nclandau/scalars.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nclandau {

template <std::size_t NV>
using Exponents = std::array<unsigned, NV>;

template <std::size_t NV>
unsigned total_degree(const Exponents<NV>& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

/// Graded lexicographic order, highest total degree first, then larger
/// x-exponent first. This is the canonical printing order.
template <std::size_t NV>
struct GradedLexDesc {
  bool operator()(const Exponents<NV>& a, const Exponents<NV>& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <std::size_t NV>
constexpr std::array<std::string_view, NV> variable_names() {
  if constexpr (NV == 2)
    return {"x", "y"};
  else if constexpr (NV == 4)
    return {"x", "y", "px", "py"};
  else
    static_assert(NV == 2 || NV == 4, "unsupported variable count");
}

template <typename S, std::size_t NV>
class Poly {
public:
  using Scalar = S;
  using Key = Exponents<NV>;
  using TermMap = std::map<Key, S, GradedLexDesc<NV>>;
  static constexpr std::size_t num_vars = NV;

  Poly() = default;

  static Poly constant(S c) {
    Poly p;
    p.add_term(Key{}, std::move(c));
    return p;
  }
  static Poly monomial(Key e, S c = S(1)) {
    Poly p;
    p.add_term(e, std::move(c));
    return p;
  }
  static Poly variable(std::size_t index) {
    Key e{};
    e.at(index) = 1;
    return monomial(e);
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coefficient(const Key& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Constant term; zero when absent.
  S constant_term() const { return coefficient(Key{}); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{}); }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  void add_term(const Key& e, const S& c) {
    if (nclandau::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (nclandau::is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Poly& operator*=(const S& s) {
    if (nclandau::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }

  /// Pointwise (commutative) product.
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Key e;
        for (std::size_t k = 0; k < NV; ++k) e[k] = ea[k] + eb[k];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Partial derivative of given order with respect to variable `var`.
  Poly derivative(std::size_t var, unsigned order = 1) const {
    if (order == 0) return *this;
    Poly out;
    for (const auto& [e, c] : terms_) {
      if (e[var] < order) continue;
      long factor = 1;
      for (unsigned k = 0; k < order; ++k) factor *= static_cast<long>(e[var] - k);
      Key ne = e;
      ne[var] -= order;
      out.add_term(ne, c * S(factor));
    }
    return out;
  }

  /// Mixed derivative d^orders[0]/dx ... applied in one pass.
  Poly derivative(const Key& orders) const {
    Poly out = *this;
    for (std::size_t v = 0; v < NV; ++v)
      if (orders[v]) out = out.derivative(v, orders[v]);
    return out;
  }

  template <typename T, typename F>
  Poly<T, NV> map_coefficients(F&& f) const {
    Poly<T, NV> out;
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  /// Canonical text form, e.g. `x*y + 1/2*i`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    constexpr auto names = variable_names<NV>();
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool neg = leading_negative(c);
      S mag = neg ? S(-c) : c;
      if (first)
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      first = false;

      std::string mono;
      for (std::size_t v = 0; v < NV; ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += names[v];
        if (e[v] > 1) mono += "^" + std::to_string(e[v]);
      }
      std::string coef = nclandau::to_string(mag);
      if (mono.empty()) {
        out += is_compound(mag) ? "(" + coef + ")" : coef;
      } else if (is_one(mag)) {
        out += mono;
      } else {
        out += (is_compound(mag) ? "(" + coef + ")" : coef) + "*" + mono;
      }
    }
    return out;
  }

private:
  TermMap terms_;
};

using ConfigPoly = Poly<GaussianRational, 2>;
using PhasePoly = Poly<GaussianRational, 4>;
using HPConfigPoly = Poly<HPComplex, 2>;

inline HPConfigPoly to_hp(const ConfigPoly& p) {
  return p.map_coefficients<HPComplex>([](const GaussianRational& c) { return HPComplex(c); });
}

template <typename S>
Poly<S, 2> var_x() {
  return Poly<S, 2>::variable(0);
}
template <typename S>
Poly<S, 2> var_y() {
  return Poly<S, 2>::variable(1);
}

/// Largest coefficient modulus; the residual norm for float-mode identities.
inline HPReal max_abs_coefficient(const HPConfigPoly& p) {
  HPReal m = 0;
  for (const auto& [e, c] : p.terms()) m = std::max(m, c.abs());
  return m;
}

}  // namespace nclandau
