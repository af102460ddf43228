#include "nclandau/scalars.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace nclandau {

namespace {

int& configured_digits() {
  static int digits = [] {
    int d = 30;
    if (const char* env = std::getenv("NCLANDAU_PRECISION_DIGITS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 10 && v <= 10000) d = static_cast<int>(v);
    }
    return d;
  }();
  return digits;
}

// Make the configured precision the MPFR default before any HPReal is built.
const bool precision_initialised = [] {
  ensure_precision();
  return true;
}();

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long e) {
  Rational r(1);
  for (long k = 0; k < e; ++k) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view mant = text;
  long exp10 = 0;
  if (auto epos = text.find_first_of("eE"); epos != std::string_view::npos) {
    mant = text.substr(0, epos);
    std::string_view es = text.substr(epos + 1);
    bool eneg = false;
    if (!es.empty() && (es[0] == '+' || es[0] == '-')) {
      eneg = es[0] == '-';
      es.remove_prefix(1);
    }
    if (!all_digits(es) || es.size() > 6) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    exp10 = std::stol(std::string(es));
    if (eneg) exp10 = -exp10;
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  Rational value{boost::multiprecision::mpz_int(digits)};
  long shift = exp10 - frac_len;
  if (shift >= 0)
    value *= pow10(shift);
  else
    value /= pow10(-shift);
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");
  bool neg = false;
  if (text[0] == '+' || text[0] == '-') {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    boost::multiprecision::mpz_int d(std::string{den});
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(boost::multiprecision::mpz_int(std::string{num}), d);
  } else {
    value = parse_decimal(text);
  }
  return neg ? Rational(-value) : value;
}

std::string rational_to_string(const Rational& q) {
  return q.str();
}

int precision_digits() { return configured_digits(); }

void set_precision_digits(int digits) {
  configured_digits() = digits;
  ensure_precision();
}

void ensure_precision() {
  HPReal::default_precision(static_cast<unsigned>(configured_digits()));
}

HPReal to_hp(const Rational& q) {
  return HPReal(boost::multiprecision::numerator(q)) / HPReal(boost::multiprecision::denominator(q));
}

HPReal HPComplex::abs() const { return boost::multiprecision::sqrt(re_ * re_ + im_ * im_); }

std::string to_string(const GaussianRational& s) {
  if (s.im() == 0) return rational_to_string(s.re());
  std::string imag;
  if (s.im() == 1)
    imag = "i";
  else if (s.im() == -1)
    imag = "-i";
  else
    imag = rational_to_string(s.im()) + "*i";
  if (s.re() == 0) return imag;
  std::string out = rational_to_string(s.re());
  if (imag[0] != '-') out += '+';
  return out + imag;
}

std::string hp_to_string(const HPReal& v) {
  std::ostringstream os;
  os.precision(precision_digits());
  os << v;
  return os.str();
}

std::string to_string(const HPComplex& s) {
  if (s.im() == 0) return hp_to_string(s.re());
  std::string imag = hp_to_string(s.im()) + "*i";
  if (s.re() == 0) return imag;
  std::string out = hp_to_string(s.re());
  if (imag[0] != '-') out += '+';
  return out + imag;
}

bool leading_negative(const GaussianRational& s) {
  return s.re() != 0 ? s.re() < 0 : s.im() < 0;
}

bool leading_negative(const HPComplex& s) {
  return s.re() != 0 ? s.re() < 0 : s.im() < 0;
}

}  // namespace nclandau
