#pragma once

// Coefficient fields shared by every algebraic layer: exact Gaussian
// rationals and high-precision complex floats (MPFR-backed, runtime digits).

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nclandau {

using Rational = boost::multiprecision::mpq_rational;
using HPReal = boost::multiprecision::mpfr_float;

/// Parses "p", "p/q", "-p/q" or a decimal string such as "0.125" / "-1.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed input or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q".
std::string rational_to_string(const Rational& q);

/// Number of significant decimal digits used for HPReal arithmetic. Read once
/// from NCLANDAU_PRECISION_DIGITS (default 30) unless overridden.
int precision_digits();
void set_precision_digits(int digits);

/// Applies the configured precision to MPFR defaults on the calling thread.
void ensure_precision();

HPReal to_hp(const Rational& q);

class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den == 0) throw std::domain_error("division by zero Gaussian rational");
    Rational re = (re_ * o.re_ + im_ * o.im_) / den;
    Rational im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  Rational re_{0};
  Rational im_{0};
};

class HPComplex {
public:
  HPComplex() : re_(0), im_(0) {}
  HPComplex(long v) : re_(v), im_(0) {}
  HPComplex(HPReal re) : re_(std::move(re)), im_(0) {}
  HPComplex(HPReal re, HPReal im) : re_(std::move(re)), im_(std::move(im)) {}
  HPComplex(const Rational& q) : re_(to_hp(q)), im_(0) {}
  HPComplex(const GaussianRational& g) : re_(to_hp(g.re())), im_(to_hp(g.im())) {}

  static HPComplex i() { return {HPReal(0), HPReal(1)}; }

  const HPReal& re() const { return re_; }
  const HPReal& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  HPReal abs() const;
  HPComplex conj() const { return {re_, -im_}; }
  std::complex<double> to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
  }

  HPComplex& operator+=(const HPComplex& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  HPComplex& operator-=(const HPComplex& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  HPComplex& operator*=(const HPComplex& o) {
    HPReal re = re_ * o.re_ - im_ * o.im_;
    HPReal im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  HPComplex& operator/=(const HPComplex& o) {
    HPReal den = o.re_ * o.re_ + o.im_ * o.im_;
    if (den == 0) throw std::domain_error("division by zero complex");
    HPReal re = (re_ * o.re_ + im_ * o.im_) / den;
    HPReal im = (im_ * o.re_ - re_ * o.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend HPComplex operator+(HPComplex a, const HPComplex& b) { return a += b; }
  friend HPComplex operator-(HPComplex a, const HPComplex& b) { return a -= b; }
  friend HPComplex operator*(HPComplex a, const HPComplex& b) { return a *= b; }
  friend HPComplex operator/(HPComplex a, const HPComplex& b) { return a /= b; }
  friend HPComplex operator-(const HPComplex& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const HPComplex& a, const HPComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  HPReal re_;
  HPReal im_;
};

// Uniform hooks used by the generic polynomial / series templates.
inline bool is_zero(const GaussianRational& s) { return s.is_zero(); }
inline bool is_zero(const HPComplex& s) { return s.is_zero(); }

template <typename S>
S imaginary_unit() {
  return S::i();
}

/// Canonical text: `a/b`, `c/d*i`, `a/b+c/d*i` (no surrounding parentheses).
std::string to_string(const GaussianRational& s);
/// Decimal text with precision_digits() significant digits.
std::string to_string(const HPComplex& s);
std::string hp_to_string(const HPReal& v);

/// Sign used for term printing: the first nonzero of (re, im) is negative.
bool leading_negative(const GaussianRational& s);
bool leading_negative(const HPComplex& s);

/// True when printing requires parentheses next to a monomial.
inline bool is_compound(const GaussianRational& s) { return s.re() != 0 && s.im() != 0; }
inline bool is_compound(const HPComplex& s) { return s.re() != 0 && s.im() != 0; }

inline bool is_one(const GaussianRational& s) { return s.re() == 1 && s.im() == 0; }
inline bool is_one(const HPComplex& s) { return s.re() == 1 && s.im() == 0; }

}  // namespace nclandau
