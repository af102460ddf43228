#pragma once

// The r-parametrized star product on polynomials in (x, y):
//
//   F *r G = sum_{m,n} a^m b^n / (m! n!) (dx^m dy^n F)(dy^m dx^n G),
//   a = -i(r-1)theta,  b = -i r theta,
//
// together with the star commutator, the c-equivalence map between two
// gauge parameters, star exponentials and the star-action dictionary
// (left star multiplication realised as a differential operator).

#include "nclandau/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace nclandau {

struct StarContext {
  Rational r{0};
  Rational theta{0};
  Rational hbar{1};
  Rational e{1};

  /// Throws std::invalid_argument unless hbar > 0.
  void validate() const;

  /// a = -i(r-1)theta, weight of (left dx)(right dy).
  GaussianRational left_x_weight() const { return {Rational(0), Rational(-(r - 1) * theta)}; }
  /// b = -i r theta, weight of (left dy)(right dx).
  GaussianRational left_y_weight() const { return {Rational(0), Rational(-r * theta)}; }
};

namespace detail {

inline Rational factorial(unsigned n) {
  Rational f(1);
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline GaussianRational power(const GaussianRational& base, unsigned n) {
  GaussianRational out(1);
  for (unsigned k = 0; k < n; ++k) out *= base;
  return out;
}

/// (a^m b^n) / (m! n!) for the bidifferential expansion.
inline GaussianRational bidiff_weight(const StarContext& ctx, unsigned m, unsigned n) {
  return power(ctx.left_x_weight(), m) * power(ctx.left_y_weight(), n) /
         GaussianRational(factorial(m) * factorial(n));
}

}  // namespace detail

template <typename S>
Poly<S, 2> star_product(const Poly<S, 2>& f, const Poly<S, 2>& g, const StarContext& ctx) {
  Poly<S, 2> out;
  if (f.is_zero() || g.is_zero()) return out;
  const unsigned m_max = std::min(f.degree_in(0), g.degree_in(1));
  const unsigned n_max = std::min(f.degree_in(1), g.degree_in(0));
  for (unsigned m = 0; m <= m_max; ++m) {
    for (unsigned n = 0; n <= n_max; ++n) {
      GaussianRational w = detail::bidiff_weight(ctx, m, n);
      if (w.is_zero()) continue;
      Poly<S, 2> lhs = f.derivative({m, n});
      if (lhs.is_zero()) continue;
      Poly<S, 2> rhs = g.derivative({n, m});
      if (rhs.is_zero()) continue;
      out += (lhs * rhs) * S(w);
    }
  }
  return out;
}

template <typename S>
Poly<S, 2> star_commutator(const Poly<S, 2>& f, const Poly<S, 2>& g, const StarContext& ctx) {
  return star_product(f, g, ctx) - star_product(g, f, ctx);
}

/// T = exp(i (r_from - r_to) theta dx dy). Satisfies
/// T(F *r_from G) = T(F) *r_to T(G); the inverse swaps r_from and r_to.
template <typename S>
Poly<S, 2> equivalence_map(const Poly<S, 2>& f, const Rational& r_from, const Rational& r_to,
                           const Rational& theta) {
  const GaussianRational step{Rational(0), Rational((r_from - r_to) * theta)};
  Poly<S, 2> out;
  Poly<S, 2> deriv = f;
  GaussianRational weight(1);
  for (unsigned k = 0; !deriv.is_zero(); ++k) {
    if (k > 0) {
      deriv = deriv.derivative({1, 1});
      weight = weight * step / GaussianRational(Rational(k));
    }
    if (weight.is_zero()) break;
    out += deriv * S(weight);
  }
  return out;
}

/// Differential operator sum_k c_k(x, y) dx^dx_k dy^dy_k. Terms sharing a
/// derivative order are merged and zero coefficients dropped.
template <typename S>
class DiffOperator {
public:
  using Order = std::pair<unsigned, unsigned>;
  using TermMap = std::map<Order, Poly<S, 2>>;

  DiffOperator() = default;

  static DiffOperator identity() {
    DiffOperator d;
    d.add_term(Poly<S, 2>::constant(S(1)), 0, 0);
    return d;
  }
  static DiffOperator multiplication(const Poly<S, 2>& c) {
    DiffOperator d;
    d.add_term(c, 0, 0);
    return d;
  }
  static DiffOperator derivative(unsigned dx, unsigned dy, const S& scale = S(1)) {
    DiffOperator d;
    d.add_term(Poly<S, 2>::constant(scale), dx, dy);
    return d;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Poly<S, 2>& c, unsigned dx, unsigned dy) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Order{dx, dy}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly<S, 2> apply(const Poly<S, 2>& psi) const {
    Poly<S, 2> out;
    for (const auto& [ord, c] : terms_) {
      Poly<S, 2> d = psi.derivative({ord.first, ord.second});
      if (!d.is_zero()) out += c * d;
    }
    return out;
  }

  DiffOperator& operator+=(const DiffOperator& o) {
    for (const auto& [ord, c] : o.terms_) add_term(c, ord.first, ord.second);
    return *this;
  }
  DiffOperator& operator-=(const DiffOperator& o) {
    for (const auto& [ord, c] : o.terms_) add_term(-c, ord.first, ord.second);
    return *this;
  }
  DiffOperator& operator*=(const S& s) {
    TermMap scaled;
    for (auto& [ord, c] : terms_) {
      Poly<S, 2> sc = c * s;
      if (!sc.is_zero()) scaled.emplace(ord, std::move(sc));
    }
    terms_ = std::move(scaled);
    return *this;
  }
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator*(DiffOperator a, const S& s) { return a *= s; }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }

  /// (a ∘ b)(psi) = a(b(psi)); expanded with the Leibniz rule.
  friend DiffOperator compose(const DiffOperator& a, const DiffOperator& b) {
    DiffOperator out;
    for (const auto& [oa, ca] : a.terms_) {
      for (const auto& [ob, cb] : b.terms_) {
        for (unsigned gx = 0; gx <= oa.first; ++gx) {
          for (unsigned gy = 0; gy <= oa.second; ++gy) {
            Poly<S, 2> dcb = cb.derivative({gx, gy});
            if (dcb.is_zero()) continue;
            Rational binom = detail::factorial(oa.first) / (detail::factorial(gx) * detail::factorial(oa.first - gx)) *
                             detail::factorial(oa.second) /
                             (detail::factorial(gy) * detail::factorial(oa.second - gy));
            out.add_term((ca * dcb) * S(GaussianRational(binom)), oa.first - gx + ob.first,
                         oa.second - gy + ob.second);
          }
        }
      }
    }
    return out;
  }

  unsigned order() const {
    unsigned o = 0;
    for (const auto& [ord, c] : terms_) o = std::max(o, ord.first + ord.second);
    return o;
  }

  template <typename T, typename F>
  DiffOperator<T> map_coefficients(F&& f) const {
    DiffOperator<T> out;
    for (const auto& [ord, c] : terms_) out.add_term(c.template map_coefficients<T>(f), ord.first, ord.second);
    return out;
  }

private:
  TermMap terms_;
};

/// The operator D with D(psi) = F *r psi.
template <typename S>
DiffOperator<S> star_action_operator(const Poly<S, 2>& f, const StarContext& ctx) {
  DiffOperator<S> out;
  for (unsigned m = 0; m <= f.degree_in(0); ++m) {
    for (unsigned n = 0; n <= f.degree_in(1); ++n) {
      GaussianRational w = detail::bidiff_weight(ctx, m, n);
      if (w.is_zero()) continue;
      Poly<S, 2> c = f.derivative({m, n});
      if (c.is_zero()) continue;
      // Left dx^m dy^n land on F; the right factors dy^m dx^n act on psi.
      out.add_term(c * S(w), n, m);
    }
  }
  return out;
}

/// Left star action of a phase-space polynomial. Momenta act as
/// p_x -> -i hbar dx, p_y -> -i hbar dy and are ordered to the right of the
/// position-dependent coefficient: c(x,y) px^u py^v -> (c *r .) ∘ (-i hbar)^(u+v) dx^u dy^v.
DiffOperator<GaussianRational> phase_action_operator(const PhasePoly& p, const StarContext& ctx);

/// Generic truncated exponential sum_{k<=order} f^k / k! in an algebra with
/// the given product and rational scaling.
template <typename T, typename Mul, typename Scale>
T truncated_exponential(const T& f, const T& one, int order, Mul&& mul, Scale&& scale) {
  if (order < 0) throw std::invalid_argument("exponential truncation order must be >= 0");
  T sum = one;
  T power = one;
  for (int k = 1; k <= order; ++k) {
    power = scale(mul(power, f), Rational(1, k));
    sum = sum + power;
  }
  return sum;
}

/// sum_{k<=order} F^{*k}/k! with every product taken as *r. Only meaningful
/// to the order in the small parameter the caller tracks.
template <typename S>
Poly<S, 2> star_exp_truncated(const Poly<S, 2>& f, const StarContext& ctx, int order) {
  return truncated_exponential(
      f, Poly<S, 2>::constant(S(1)), order,
      [&](const Poly<S, 2>& a, const Poly<S, 2>& b) { return star_product(a, b, ctx); },
      [](const Poly<S, 2>& a, const Rational& q) { return a * S(GaussianRational(q)); });
}

}  // namespace nclandau
