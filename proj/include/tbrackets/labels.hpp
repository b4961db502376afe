#pragma once

// Quantum-number content of the two chains
//   spherical: U(nu+1) > U(nu) > SO(nu),     labels (N, n, tau)
//   deformed:  U(nu+1) > SO(nu+1) > SO(nu),  labels (N, sigma, tau)
// restricted to the symmetric irreps [N]. For nu = 2 the SO(2) label tau is
// signed; everywhere else it is nonnegative.

#include <cstdlib>
#include <string>
#include <vector>

#include "tbrackets/exactnum.hpp"

namespace tbrackets {

/// A label tuple that violates a branching rule.
class LabelError : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedDimension : public LabelError {
 public:
  explicit UnsupportedDimension(int nu)
      : LabelError("dimension nu = " + std::to_string(nu) + " is unsupported (need nu >= 2)") {}
};

inline void require_dimension(int nu) {
  if (nu < 2) throw UnsupportedDimension(nu);
}

namespace detail {
inline std::string tuple_text(int nu, int N, const char* mid_name, int mid, int tau) {
  return "(nu=" + std::to_string(nu) + ", N=" + std::to_string(N) + ", " + mid_name + "=" +
         std::to_string(mid) + ", tau=" + std::to_string(tau) + ")";
}
}  // namespace detail

/// |[N], n, tau>.
struct ChainILabel {
  int nu = 2;
  int N = 0;
  int n = 0;
  int tau = 0;

  /// Throws LabelError naming the first violated rule.
  static ChainILabel make(int nu, int N, int n, int tau) {
    require_dimension(nu);
    const auto where = detail::tuple_text(nu, N, "n", n, tau);
    if (N < 0) throw LabelError("total boson number N must be >= 0 " + where);
    if (n < 0 || n > N) throw LabelError("U(nu) label must satisfy 0 <= n <= N " + where);
    if (nu > 2 && tau < 0) throw LabelError("SO(nu) label tau must be >= 0 for nu > 2 " + where);
    if (std::abs(tau) > n) throw LabelError("SO(nu) label must satisfy |tau| <= n " + where);
    if ((n - std::abs(tau)) % 2 != 0) throw LabelError("n - tau must be even " + where);
    return {nu, N, n, tau};
  }

  friend bool operator==(const ChainILabel&, const ChainILabel&) = default;
};

/// |[N], sigma, tau>.
struct ChainIILabel {
  int nu = 2;
  int N = 0;
  int sigma = 0;
  int tau = 0;

  static ChainIILabel make(int nu, int N, int sigma, int tau) {
    require_dimension(nu);
    const auto where = detail::tuple_text(nu, N, "sigma", sigma, tau);
    if (N < 0) throw LabelError("total boson number N must be >= 0 " + where);
    if (sigma < 0 || sigma > N) throw LabelError("SO(nu+1) label must satisfy 0 <= sigma <= N " + where);
    if ((N - sigma) % 2 != 0) throw LabelError("N - sigma must be even " + where);
    if (nu > 2 && tau < 0) throw LabelError("SO(nu) label tau must be >= 0 for nu > 2 " + where);
    if (std::abs(tau) > sigma) throw LabelError("SO(nu) label must satisfy |tau| <= sigma " + where);
    return {nu, N, sigma, tau};
  }

  friend bool operator==(const ChainIILabel&, const ChainIILabel&) = default;
};

/// SU(1,1) quasi-spin labels |q, q0> attached to |[n], tau> of U(nu) > SO(nu).
struct QuasiSpinLabel {
  Rational q;
  Rational q0;
};

/// Sorted by (n, tau).
inline std::vector<ChainILabel> enumerate_chain1(int nu, int N) {
  require_dimension(nu);
  if (N < 0) throw LabelError("total boson number N must be >= 0");
  std::vector<ChainILabel> out;
  for (int n = 0; n <= N; ++n) {
    const int lo = nu == 2 ? -n : n % 2;
    for (int tau = lo; tau <= n; tau += 2) out.push_back({nu, N, n, tau});
  }
  return out;
}

/// Sorted by (sigma, tau).
inline std::vector<ChainIILabel> enumerate_chain2(int nu, int N) {
  require_dimension(nu);
  if (N < 0) throw LabelError("total boson number N must be >= 0");
  std::vector<ChainIILabel> out;
  for (int sigma = N % 2; sigma <= N; sigma += 2) {
    const int lo = nu == 2 ? -sigma : 0;
    for (int tau = lo; tau <= sigma; ++tau) out.push_back({nu, N, sigma, tau});
  }
  return out;
}

/// Row (n) and column (sigma) labels of the square bracket matrix for fixed tau.
struct BracketIndexSet {
  std::vector<int> n;
  std::vector<int> sigma;
  std::size_t dimension() const { return n.size(); }
};

inline void require_admissible_tau(int nu, int N, int tau) {
  require_dimension(nu);
  if (N < 0) throw LabelError("total boson number N must be >= 0");
  if (nu > 2 && tau < 0) throw LabelError("SO(nu) label tau must be >= 0 for nu > 2");
  if (std::abs(tau) > N) {
    throw LabelError("tau = " + std::to_string(tau) + " does not occur in [N=" + std::to_string(N) + "]");
  }
}

inline BracketIndexSet bracket_index_set(int nu, int N, int tau) {
  require_admissible_tau(nu, N, tau);
  const int t = std::abs(tau);
  BracketIndexSet out;
  for (int n = t; n <= N; n += 2) out.n.push_back(n);
  for (int sigma = t + ((N - t) % 2); sigma <= N; sigma += 2) out.sigma.push_back(sigma);
  return out;
}

/// q0 = (n + nu/2)/2, q = (|tau| + nu/2)/2.
inline QuasiSpinLabel quasispin_labels(int nu, int n, int tau) {
  const auto label = ChainILabel::make(nu, n, n, tau);
  const Rational half_nu(nu, 2);
  return {(Rational(std::abs(label.tau)) + half_nu) / Rational(2), (Rational(label.n) + half_nu) / Rational(2)};
}

}  // namespace tbrackets
