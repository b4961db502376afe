#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact number tower: big integers, rationals, Gaussian rationals and
 *        quadratic surds, plus the combinatorial functions the bracket
 *        formulas consume.
 *
 * Integers and rationals are backed by GMP. Every coefficient in the library
 * has the form sign * sqrt(q) with q a nonnegative rational, so SurdValue is
 * closed under products and rational scaling. Sums are only exact when the
 * radicands agree up to a rational square; SurdSum groups terms by that
 * relation and collapses back to a single surd when possible.
 */

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tbrackets {

using Integer = mpz_class;

/// Raised when a formula is evaluated outside its domain (bad labels, m < -1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two surds are added whose radicands are not rationally related.
class SurdAdditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rational in lowest terms with positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p" or "p/q" (decimal integers, optional leading sign on p).
  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(text));
      return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw DomainError("malformed rational: '" + text + "'");
    }
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// True iff this is the square of a rational.
  bool is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(v_.get_num_mpz_t()) != 0 &&
           mpz_perfect_square_p(v_.get_den_mpz_t()) != 0;
  }

  /// Exact square root; precondition is_perfect_square().
  Rational exact_sqrt() const {
    if (!is_perfect_square()) throw DomainError("exact_sqrt of non-square " + to_string());
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den_mpz_t());
    return Rational(n, d);
  }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

  double to_double() const { return v_.get_d(); }
  std::string to_string() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

/// re + i*im with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (o.im.is_zero()) {
      re *= o.re;
      im *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    const Rational d = o.norm2();
    if (d.is_zero()) throw DomainError("division by zero");
    *this *= o.conj();
    re /= d;
    im /= d;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    return re.to_string() + (im.sign() < 0 ? "-" : "+") + im.abs().to_string() + "i";
  }
};

// ---------------------------------------------------------------------------
// Combinatorics

inline Integer factorial(long m) {
  if (m < 0) throw DomainError("factorial of negative argument " + std::to_string(m));
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

/// m!! with (-1)!! = 0!! = 1; anything below -1 is a domain error.
inline Integer double_factorial(long m) {
  if (m < -1) throw DomainError("double factorial of " + std::to_string(m) + " (< -1)");
  if (m <= 0) return Integer(1);
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1).
inline Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw DomainError("pochhammer with negative length");
  Rational r(1);
  for (long i = 0; i < k; ++i) r *= a + Rational(i);
  return r;
}

/// C(top, bottom), zero outside 0 <= bottom <= top.
inline Integer binomial(long top, long bottom) {
  if (top < 0) throw DomainError("binomial with negative top");
  if (bottom < 0 || bottom > top) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return r;
}

// ---------------------------------------------------------------------------
// Quadratic surds

/// sign * sqrt(radicand); sign is 0 exactly when radicand is 0.
class SurdValue {
 public:
  SurdValue() = default;

  SurdValue(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
    if (radicand_.sign() < 0) throw DomainError("negative radicand " + radicand_.to_string());
    if (sign_ < -1 || sign_ > 1) throw DomainError("surd sign must be -1, 0 or +1");
    if (radicand_.is_zero()) sign_ = 0;
    if (sign_ == 0) radicand_ = Rational(0);
  }

  /// +sqrt(q).
  static SurdValue sqrt_of(const Rational& q) { return SurdValue(q.is_zero() ? 0 : 1, q); }
  /// The rational q itself, as sign(q) * sqrt(q^2).
  static SurdValue from_rational(const Rational& q) { return SurdValue(q.sign(), q * q); }
  static SurdValue one() { return SurdValue(1, Rational(1)); }
  static SurdValue zero() { return {}; }

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_rational() const { return radicand_.is_perfect_square(); }

  /// Value as a rational; precondition is_rational().
  Rational to_rational() const {
    Rational r = radicand_.exact_sqrt();
    return sign_ < 0 ? -r : r;
  }

  SurdValue operator-() const { return SurdValue(-sign_, radicand_); }
  SurdValue inverse() const {
    if (is_zero()) throw DomainError("inverse of zero surd");
    return SurdValue(sign_, radicand_.inverse());
  }

  /// Correctly rounded double (single rounding from a 256-bit intermediate).
  double to_double() const {
    if (sign_ == 0) return 0.0;
    mpfr_t hi, lo;
    mpfr_init2(hi, 256);
    mpfr_init2(lo, 53);
    mpfr_set_q(hi, radicand_.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_sqrt(lo, hi, MPFR_RNDN);
    double d = mpfr_get_d(lo, MPFR_RNDN);
    mpfr_clear(hi);
    mpfr_clear(lo);
    return sign_ < 0 ? -d : d;
  }

  /// "+sqrt(p/q)", "-sqrt(p)" or "0".
  std::string to_string() const {
    if (sign_ == 0) return "0";
    return std::string(sign_ < 0 ? "-" : "+") + "sqrt(" + radicand_.to_string() + ")";
  }

  friend bool operator==(const SurdValue& a, const SurdValue& b) {
    return a.sign_ == b.sign_ && a.radicand_ == b.radicand_;
  }

  friend std::ostream& operator<<(std::ostream& os, const SurdValue& s) { return os << s.to_string(); }

 private:
  int sign_ = 0;
  Rational radicand_;
};

inline SurdValue surd_mul(const SurdValue& a, const SurdValue& b) {
  return SurdValue(a.sign() * b.sign(), a.radicand() * b.radicand());
}

inline SurdValue surd_scale(const Rational& q, const SurdValue& a) {
  return SurdValue(q.sign() * a.sign(), q * q * a.radicand());
}

inline SurdValue operator*(const SurdValue& a, const SurdValue& b) { return surd_mul(a, b); }
inline SurdValue operator*(const Rational& q, const SurdValue& a) { return surd_scale(q, a); }
inline SurdValue operator/(const SurdValue& a, const SurdValue& b) { return surd_mul(a, b.inverse()); }

/// If radicands a and b differ by a rational square factor, returns sqrt(b/a).
inline bool surd_ratio(const Rational& a, const Rational& b, Rational& root) {
  const Rational q = b / a;
  if (!q.is_perfect_square()) return false;
  root = q.exact_sqrt();
  return true;
}

/// Exact sum; only defined when the radicands have a rational square ratio.
inline SurdValue surd_add(const SurdValue& a, const SurdValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Rational root;
  if (!surd_ratio(a.radicand(), b.radicand(), root)) {
    throw SurdAdditionError("surds " + a.to_string() + " and " + b.to_string() + " are not commensurable");
  }
  // a + b = (sa + sb * root) * sqrt(ra)
  const Rational coeff = Rational(a.sign()) + Rational(b.sign()) * root;
  return surd_scale(coeff, SurdValue::sqrt_of(a.radicand()));
}

/// Rational linear combination of square roots, grouped into commensurability
/// classes. Distinct classes are linearly independent over Q, so the sum is a
/// single surd iff at most one class has a nonzero coefficient.
class SurdSum {
 public:
  SurdSum& operator+=(const SurdValue& s) {
    if (s.is_zero()) return *this;
    for (auto& [rep, coeff] : terms_) {
      Rational root;
      if (surd_ratio(rep, s.radicand(), root)) {
        coeff += Rational(s.sign()) * root;
        return *this;
      }
    }
    terms_.emplace_back(s.radicand(), Rational(s.sign()));
    return *this;
  }

  std::size_t class_count() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n += t.second.is_zero() ? 0 : 1;
    return n;
  }

  bool is_surd() const { return class_count() <= 1; }

  SurdValue to_surd() const {
    SurdValue out;
    for (const auto& [rep, coeff] : terms_) {
      if (coeff.is_zero()) continue;
      if (!out.is_zero()) throw SurdAdditionError("sum spans several incommensurable surds");
      out = surd_scale(coeff, SurdValue::sqrt_of(rep));
    }
    return out;
  }

  double to_double() const {
    double d = 0.0;
    for (const auto& [rep, coeff] : terms_) d += coeff.to_double() * SurdValue::sqrt_of(rep).to_double();
    return d;
  }

 private:
  std::vector<std::pair<Rational, Rational>> terms_;  // (representative radicand, coefficient)
};

/// printf-style "%.10g": 10 significant digits, ties resolved by the C library
/// on the exact binary value.
inline std::string render_float(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", d);
  return buf;
}

/// Human rendering used by the CLI: "-sqrt(1/3) ≈ -0.5773502692" or
/// "+sqrt(1) = 1" when the decimal rendering is exact.
inline std::string render_surd(const SurdValue& s) {
  const std::string f = render_float(s.to_double());
  bool exact = false;
  if (s.is_rational()) {
    // The rendering is exact iff it parses back to the same rational.
    std::string digits = f;
    bool neg = !digits.empty() && digits[0] == '-';
    if (neg) digits.erase(0, 1);
    if (digits.find('e') == std::string::npos) {
      Integer den(1);
      const auto dot = digits.find('.');
      if (dot != std::string::npos) {
        for (std::size_t i = dot + 1; i < digits.size(); ++i) den *= 10;
        digits.erase(dot, 1);
      }
      Rational parsed(Integer(digits), den);
      if (neg) parsed = -parsed;
      exact = parsed == s.to_rational();
    }
  }
  return s.to_string() + (exact ? " = " : " ≈ ") + f;
}

}  // namespace tbrackets
