#pragma once

/**
 * @file brackets.hpp
 * @brief Closed-form normalization coefficients and transformation brackets
 *        c^tau_{n sigma} = <[N], n, tau | [N], sigma, tau>.
 *
 * Each formula is evaluated as (exact rational k-sum) x (one surd prefactor),
 * so no surd addition is needed. Four independent routes to the bracket are
 * provided:
 *   - bracket():               sqrt((N-n)!) A_{N sigma} / B_{n tau} sum_k F_k binom(...)
 *   - bracket_expanded():      the same sum with all coefficients multiplied out
 *   - bracket_pochhammer():    the hypergeometric (Pochhammer) rewriting
 *   - bracket_sigma_eq_N():    the summed special case sigma = N
 * For nu = 2 all coefficients depend on |tau| only.
 */

#include <cstdlib>
#include <string>
#include <vector>

#include "tbrackets/exactnum.hpp"
#include "tbrackets/labels.hpp"

namespace tbrackets {

/// Realization of SO(nu+1): standard pair operator s+s+ + I+_nu, or the barred
/// one s+s+ - I+_nu (generators s+ b_j + b+_j s).
enum class Convention { standard, barred };

inline const char* to_string(Convention c) { return c == Convention::standard ? "standard" : "barred"; }

inline Convention parse_convention(const std::string& s) {
  if (s == "standard") return Convention::standard;
  if (s == "barred") return Convention::barred;
  throw DomainError("unknown convention '" + s + "' (expected standard or barred)");
}

namespace detail {

inline int parity_sign(long half_exponent) { return half_exponent % 2 == 0 ? 1 : -1; }

inline Rational ratio(const Integer& num, const Integer& den) { return Rational(num, den); }

inline Rational power(const Rational& base, long e) {
  Rational r(1);
  const Rational b = e < 0 ? base.inverse() : base;
  for (long i = 0; i < std::labs(e); ++i) r *= b;
  return r;
}

/// Square of the F_k prefactor: (sigma-tau)! (2tau+nu-2)!! / ((2sigma+nu-3)!! (sigma+tau+nu-2)!).
inline Rational f_prefactor_squared(int nu, int sigma, int tau) {
  return ratio(factorial(sigma - tau) * double_factorial(2 * tau + nu - 2),
               double_factorial(2 * sigma + nu - 3) * factorial(sigma + tau + nu - 2));
}

/// Rational part of F_k: (-1/2)^k (2sigma+nu-3-2k)!! / ((sigma-tau-2k)! k!).
inline Rational f_rational(int nu, int sigma, int tau, int k) {
  return power(Rational(-1, 2), k) *
         ratio(double_factorial(2 * sigma + nu - 3 - 2 * k), factorial(sigma - tau - 2 * k) * factorial(k));
}

struct CheckedLabels {
  int N, n, sigma, tau;  // tau already |tau|
};

inline CheckedLabels check_bracket_labels(int nu, int N, int n, int sigma, int tau) {
  ChainILabel::make(nu, N, n, tau);
  ChainIILabel::make(nu, N, sigma, tau);
  return {N, n, sigma, std::abs(tau)};
}

inline int k_lower(const CheckedLabels& l) { return std::max(0, (l.n - l.tau - l.N + l.sigma) / 2); }
inline int k_upper(const CheckedLabels& l) { return (l.sigma - l.tau) / 2; }

}  // namespace detail

/// B_{n tau} = (-1)^{(n-tau)/2} sqrt[(2tau+nu-2)!! / ((n+tau+nu-2)!! (n-tau)!!)].
inline SurdValue coeff_B(int nu, int n, int tau) {
  const auto l = ChainILabel::make(nu, n, n, tau);
  const int t = std::abs(l.tau);
  const Rational rad = detail::ratio(double_factorial(2 * t + nu - 2),
                                     double_factorial(n + t + nu - 2) * double_factorial(n - t));
  return SurdValue(detail::parity_sign((n - t) / 2), rad);
}

/// A_{N sigma} = (-1)^{(N-sigma)/2} sqrt[(2sigma+nu-1)!! / ((N+sigma+nu-1)!! (N-sigma)!!)].
inline SurdValue coeff_A(int nu, int N, int sigma) {
  ChainIILabel::make(nu, N, sigma, 0);
  const Rational rad = detail::ratio(double_factorial(2 * sigma + nu - 1),
                                     double_factorial(N + sigma + nu - 1) * double_factorial(N - sigma));
  return SurdValue(detail::parity_sign((N - sigma) / 2), rad);
}

/// Expansion coefficient of (s+)^{sigma-tau-2k} (I+_{nu+1})^k |[tau],tau,tau> in |[sigma],sigma,tau>.
inline SurdValue coeff_F(int nu, int sigma, int tau, int k) {
  require_dimension(nu);
  const int t = std::abs(tau);
  if (t > sigma || sigma < 0) throw DomainError("coeff_F needs 0 <= |tau| <= sigma");
  if (k < 0 || k > (sigma - t) / 2) {
    throw DomainError("coeff_F: k = " + std::to_string(k) + " outside [0, " + std::to_string((sigma - t) / 2) + "]");
  }
  return surd_scale(detail::f_rational(nu, sigma, t, k), SurdValue::sqrt_of(detail::f_prefactor_squared(nu, sigma, t)));
}

/// c^tau_{n sigma} from the overlap of the two constructions.
inline SurdValue bracket(int nu, int N, int n, int sigma, int tau, Convention convention = Convention::standard) {
  const auto l = detail::check_bracket_labels(nu, N, n, sigma, tau);
  Rational sum;
  for (int k = detail::k_lower(l); k <= detail::k_upper(l); ++k) {
    sum += detail::f_rational(nu, l.sigma, l.tau, k) *
           Rational(binomial(k + (l.N - l.sigma) / 2, (l.n - l.tau) / 2));
  }
  if (sum.is_zero()) return SurdValue::zero();
  SurdValue prefactor = SurdValue::sqrt_of(Rational(factorial(l.N - l.n))) * coeff_A(nu, l.N, l.sigma) /
                        coeff_B(nu, l.n, l.tau) * SurdValue::sqrt_of(detail::f_prefactor_squared(nu, l.sigma, l.tau));
  SurdValue c = surd_scale(sum, prefactor);
  if (convention == Convention::barred && (l.n - l.tau) / 2 % 2 != 0) c = -c;
  return c;
}

/// Same bracket with B, A and F multiplied out into one prefactor and one sum.
inline SurdValue bracket_expanded(int nu, int N, int n, int sigma, int tau) {
  const auto l = detail::check_bracket_labels(nu, N, n, sigma, tau);
  const int N_ = l.N, n_ = l.n, s = l.sigma, t = l.tau;
  Rational sum;
  for (int k = detail::k_lower(l); k <= detail::k_upper(l); ++k) {
    const Rational term = detail::ratio(double_factorial(2 * s + nu - 3 - 2 * k) * double_factorial(N_ - s + 2 * k),
                                        factorial(s - t - 2 * k) * double_factorial(2 * k) *
                                            double_factorial(N_ - s - n_ + t + 2 * k));
    sum += k % 2 == 0 ? term : -term;
  }
  if (sum.is_zero()) return SurdValue::zero();
  const Rational rad = detail::ratio(factorial(N_ - n_) * double_factorial(n_ + t + nu - 2) * factorial(s - t) *
                                         Integer(2 * s + nu - 1),
                                     double_factorial(N_ + s + nu - 1) * double_factorial(N_ - s) *
                                         factorial(s + t + nu - 2) * double_factorial(n_ - t));
  return surd_scale(sum, SurdValue(detail::parity_sign((N_ - s - n_ + t) / 2), rad));
}

/// Pochhammer form; half-integer arguments (even nu) stay exact rationals.
inline SurdValue bracket_pochhammer(int nu, int N, int n, int sigma, int tau) {
  const auto l = detail::check_bracket_labels(nu, N, n, sigma, tau);
  const int N_ = l.N, n_ = l.n, s = l.sigma, t = l.tau;
  const int shift = (N_ - s - n_ + t) / 2;  // may be negative
  const Rational a1 = Rational(N_ - s, 2) + Rational(1);
  const Rational a2 = Rational(t - s, 2);
  const Rational a3 = Rational(t - s + 1, 2);
  const Rational b1 = Rational(-s) - Rational(nu - 3, 2);
  Rational sum;
  for (int k = detail::k_lower(l); k <= detail::k_upper(l); ++k) {
    sum += pochhammer(a1, k) * pochhammer(a2, k) * pochhammer(a3, k) /
           (Rational(factorial(k)) * Rational(factorial(shift + k)) * pochhammer(b1, k));
  }
  if (sum.is_zero()) return SurdValue::zero();
  const Rational outer = detail::power(Rational(-1, 2), shift) * Rational(double_factorial(2 * s + nu - 1));
  const Rational rad = detail::ratio(factorial(N_ - n_) * double_factorial(N_ - s) * double_factorial(n_ + t + nu - 2),
                                     factorial(s - t) * double_factorial(n_ - t) * factorial(s + t + nu - 2) *
                                         double_factorial(N_ + s + nu - 1) * Integer(2 * s + nu - 1));
  return surd_scale(outer * sum, SurdValue::sqrt_of(rad));
}

/// Summed form for the lowest SO(nu+1) irrep sigma = N; always nonnegative.
inline SurdValue bracket_sigma_eq_N(int nu, int N, int n, int tau) {
  const auto l = detail::check_bracket_labels(nu, N, n, N, tau);
  const int t = l.tau;
  const Rational rad = detail::ratio(factorial(N - t) * factorial(N + t + nu - 2),
                                     factorial(N - n) * double_factorial(n + t + nu - 2) * double_factorial(n - t) *
                                         double_factorial(2 * N + nu - 3));
  return SurdValue::sqrt_of(rad);
}

/// Bracket between arbitrary labels: zero unless N and tau agree.
inline SurdValue overlap(const ChainILabel& a, const ChainIILabel& b, Convention convention = Convention::standard) {
  if (a.nu != b.nu || a.N != b.N || a.tau != b.tau) return SurdValue::zero();
  return bracket(a.nu, a.N, a.n, b.sigma, a.tau, convention);
}

// ---------------------------------------------------------------------------

/// Orthogonal matrix |[N],sigma,tau> = sum_n c^tau_{n sigma} |[N],n,tau>;
/// rows are n ascending, columns sigma ascending.
struct BracketTable {
  int nu = 2;
  int N = 0;
  int tau = 0;
  Convention convention = Convention::standard;
  std::vector<int> n;
  std::vector<int> sigma;
  std::vector<std::vector<SurdValue>> entries;

  std::size_t dimension() const { return n.size(); }
  const SurdValue& at(std::size_t row, std::size_t col) const { return entries.at(row).at(col); }

  /// Exact check of C^T C = 1 and C C^T = 1.
  bool is_orthogonal() const {
    const std::size_t d = dimension();
    auto dot = [&](bool columns, std::size_t a, std::size_t b) {
      SurdSum acc;
      for (std::size_t i = 0; i < d; ++i) {
        acc += columns ? entries[i][a] * entries[i][b] : entries[a][i] * entries[b][i];
      }
      return acc;
    };
    for (bool columns : {true, false}) {
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
          const SurdSum s = dot(columns, a, b);
          if (!s.is_surd()) return false;
          if (s.to_surd() != (a == b ? SurdValue::one() : SurdValue::zero())) return false;
        }
      }
    }
    return true;
  }
};

inline BracketTable table(int nu, int N, int tau, Convention convention = Convention::standard) {
  const auto idx = bracket_index_set(nu, N, tau);
  BracketTable out{nu, N, tau, convention, idx.n, idx.sigma, {}};
  out.entries.reserve(idx.n.size());
  for (int n : idx.n) {
    std::vector<SurdValue> row;
    row.reserve(idx.sigma.size());
    for (int sigma : idx.sigma) row.push_back(bracket(nu, N, n, sigma, tau, convention));
    out.entries.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gegenbauer route to F_k

/// Monomial coefficients [c_0, ..., c_m] of C^lambda_m(x) from the three-term recurrence.
inline std::vector<Rational> gegenbauer_coeffs(const Rational& lambda, int m) {
  if (lambda.sign() <= 0) throw DomainError("gegenbauer_coeffs needs lambda > 0");
  if (m < 0) throw DomainError("gegenbauer_coeffs needs m >= 0");
  std::vector<Rational> prev{Rational(1)};
  if (m == 0) return prev;
  std::vector<Rational> cur{Rational(0), Rational(2) * lambda};
  for (int j = 2; j <= m; ++j) {
    std::vector<Rational> next(j + 1);
    const Rational up = Rational(2) * (Rational(j - 1) + lambda) / Rational(j);
    const Rational down = (Rational(j - 2) + Rational(2) * lambda) / Rational(j);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += up * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= down * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

/// pi * A_{N sigma tau}^2 / 2^{(nu+1)/2} for the hyperspherical normalization
///   A_{N sigma tau} = (-1)^{(N-sigma)/2} (2tau+nu-3)!!
///     [2^{(2sigma+nu+1)/2} (2sigma+nu-1) (N-sigma)!! (sigma-tau)! / (pi (N+sigma+nu-1)!! (sigma+tau+nu-2)!)]^{1/2}.
/// The dropped factor does not depend on N, sigma or tau.
inline Rational hyperspherical_norm_reduced(int nu, int N, int sigma, int tau) {
  const Integer df = double_factorial(2 * tau + nu - 3);
  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(sigma));
  return ratio(df * df * two_pow * Integer(2 * sigma + nu - 1) * double_factorial(N - sigma) * factorial(sigma - tau),
               double_factorial(N + sigma + nu - 1) * factorial(sigma + tau + nu - 2));
}

}  // namespace detail

/// F_k reconstructed as (A_{sigma sigma tau}/A_{tau tau tau}) 2^{-(sigma-tau)/2} g_{sigma-tau-2k},
/// where g are the coefficients of C^{(2tau+nu-1)/2}_{sigma-tau}.
inline std::vector<SurdValue> F_via_gegenbauer(int nu, int sigma, int tau) {
  require_dimension(nu);
  const int t = std::abs(tau);
  if (t > sigma) throw DomainError("F_via_gegenbauer needs |tau| <= sigma");
  const int m = sigma - t;
  const auto g = gegenbauer_coeffs(Rational(2 * t + nu - 1, 2), m);
  const Rational ratio_sq =
      detail::hyperspherical_norm_reduced(nu, sigma, sigma, t) / detail::hyperspherical_norm_reduced(nu, t, t, t);
  const SurdValue scale = SurdValue::sqrt_of(ratio_sq / detail::power(Rational(2), m));
  std::vector<SurdValue> out;
  for (int k = 0; k <= m / 2; ++k) out.push_back(surd_scale(g[m - 2 * k], scale));
  return out;
}

inline bool verify_F_via_gegenbauer(int nu, int sigma, int tau) {
  const auto via = F_via_gegenbauer(nu, sigma, tau);
  for (int k = 0; k < static_cast<int>(via.size()); ++k) {
    if (via[k] != coeff_F(nu, sigma, tau, k)) return false;
  }
  // Odd-parity coefficients of C_m must vanish: they would pair with half-integer powers of I+.
  const int m = sigma - std::abs(tau);
  const auto g = gegenbauer_coeffs(Rational(2 * std::abs(tau) + nu - 1, 2), m);
  for (int j = (m + 1) % 2; j <= m; j += 2) {
    if (!g[j].is_zero()) return false;
  }
  return true;
}

}  // namespace tbrackets
