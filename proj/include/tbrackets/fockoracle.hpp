#pragma once

/**
 * @file fockoracle.hpp
 * @brief Symbolic boson Fock space used to certify the closed forms.
 *
 * States are finite sums of monomials (b+_0)^{n_0} ... (b+_nu)^{n_nu} |0>
 * (mode 0 is the s boson) with Gaussian-rational coefficients. Monomials are
 * NOT normalized; the inner product carries the prod_j n_j! weights.
 *
 * Both bases are built on the same seed state (b+_1 + i b+_2)^tau |0>, which
 * is annihilated by the pair operator sum_j b_j b_j. The deformed basis is
 * obtained from the kernel of the SO(nu+1) pair annihilator by exact Gaussian
 * elimination, so it never touches the closed-form expansion coefficients.
 */

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tbrackets/brackets.hpp"
#include "tbrackets/exactnum.hpp"
#include "tbrackets/labels.hpp"

namespace tbrackets {

/// Raised when the oracle's own consistency conditions fail (e.g. a kernel
/// that is not one-dimensional); always indicates a bug.
class OracleError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Occupation numbers (n_0 = s, n_1 ... n_nu = b).
using Occupation = std::vector<int>;

class FockState {
 public:
  using Terms = std::map<Occupation, GaussianRational>;

  FockState() = default;
  explicit FockState(int modes) : modes_(modes) {}

  static FockState vacuum(int modes) { return monomial(Occupation(static_cast<std::size_t>(modes), 0)); }

  static FockState monomial(const Occupation& occ, GaussianRational coeff = GaussianRational(1)) {
    FockState s(static_cast<int>(occ.size()));
    s.add(occ, coeff);
    return s;
  }

  int modes() const { return modes_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussianRational coefficient(const Occupation& occ) const {
    const auto it = terms_.find(occ);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add(const Occupation& occ, const GaussianRational& coeff) {
    if (coeff.is_zero()) return;
    if (modes_ == 0) modes_ = static_cast<int>(occ.size());
    auto [it, inserted] = terms_.try_emplace(occ, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FockState& operator+=(const FockState& o) {
    for (const auto& [occ, c] : o.terms_) add(occ, c);
    return *this;
  }
  FockState& operator-=(const FockState& o) {
    for (const auto& [occ, c] : o.terms_) add(occ, -c);
    return *this;
  }
  FockState& operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [occ, v] : terms_) v *= c;
    return *this;
  }

  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const GaussianRational& c, FockState a) { return a *= c; }
  friend bool operator==(const FockState& a, const FockState& b) { return a.terms_ == b.terms_; }

 private:
  int modes_ = 0;
  Terms terms_;
};

/// <psi|phi> = sum over shared monomials of conj(psi_m) phi_m prod_j n_j!.
inline GaussianRational inner(const FockState& psi, const FockState& phi) {
  const bool psi_smaller = psi.size() <= phi.size();
  const auto& small = psi_smaller ? psi.terms() : phi.terms();
  const auto& large = psi_smaller ? phi.terms() : psi.terms();
  GaussianRational acc;
  for (const auto& [occ, c] : small) {
    const auto it = large.find(occ);
    if (it == large.end()) continue;
    Integer weight(1);
    for (int k : occ) weight *= factorial(k);
    const GaussianRational& bra = psi_smaller ? c : it->second;
    const GaussianRational& ket = psi_smaller ? it->second : c;
    acc += bra.conj() * ket * GaussianRational(Rational(weight));
  }
  return acc;
}

/// Norm squared; always a nonnegative rational.
inline Rational norm2(const FockState& psi) { return inner(psi, psi).re; }

// ---------------------------------------------------------------------------
// Operators

struct Ladder {
  int mode;
  bool create;
  friend bool operator==(const Ladder&, const Ladder&) = default;
};

/// coeff * word, with word[0] the leftmost factor (acts last).
struct OperatorTerm {
  GaussianRational coeff;
  std::vector<Ladder> word;
};

/// Finite sum of products of creation/annihilation operators.
class BosonOperator {
 public:
  BosonOperator() = default;

  static BosonOperator scalar(GaussianRational c) { return from_term({std::move(c), {}}); }
  static BosonOperator identity() { return scalar(GaussianRational(1)); }
  static BosonOperator create(int mode) { return from_term({GaussianRational(1), {{mode, true}}}); }
  static BosonOperator annihilate(int mode) { return from_term({GaussianRational(1), {{mode, false}}}); }

  const std::vector<OperatorTerm>& terms() const { return terms_; }

  BosonOperator& operator+=(const BosonOperator& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
  }
  BosonOperator& operator-=(const BosonOperator& o) { return *this += GaussianRational(-1) * o; }

  friend BosonOperator operator+(BosonOperator a, const BosonOperator& b) { return a += b; }
  friend BosonOperator operator-(BosonOperator a, const BosonOperator& b) { return a -= b; }
  friend BosonOperator operator*(const GaussianRational& c, BosonOperator a) {
    for (auto& t : a.terms_) t.coeff = c * t.coeff;
    return a;
  }
  friend BosonOperator operator*(const BosonOperator& a, const BosonOperator& b) {
    BosonOperator out;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        OperatorTerm t{ta.coeff * tb.coeff, ta.word};
        t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
        out.terms_.push_back(std::move(t));
      }
    }
    return out;
  }

  /// Exact linear action: b+_j raises n_j; b_j multiplies by n_j and lowers.
  FockState apply(const FockState& psi) const {
    FockState out(psi.modes());
    for (const auto& [occ0, c0] : psi.terms()) {
      for (const auto& t : terms_) {
        Occupation occ = occ0;
        long weight = 1;
        bool alive = true;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) {
          int& n = occ.at(static_cast<std::size_t>(it->mode));
          if (it->create) {
            ++n;
          } else {
            if (n == 0) {
              alive = false;
              break;
            }
            weight *= n;
            --n;
          }
        }
        if (alive) out.add(occ, t.coeff * c0 * GaussianRational(weight));
      }
    }
    return out;
  }

 private:
  static BosonOperator from_term(OperatorTerm t) {
    BosonOperator op;
    op.terms_.push_back(std::move(t));
    return op;
  }
  std::vector<OperatorTerm> terms_;
};

inline BosonOperator commutator(const BosonOperator& a, const BosonOperator& b) { return a * b - b * a; }

/// The named operators of the two chains. Mode 0 is s, modes 1..nu are b.
namespace ops {

inline BosonOperator number(int mode) { return BosonOperator::create(mode) * BosonOperator::annihilate(mode); }

/// N = sum_{j=0}^{nu} b+_j b_j.
inline BosonOperator total_number(int nu) {
  BosonOperator op;
  for (int j = 0; j <= nu; ++j) op += number(j);
  return op;
}

/// n = sum_{j=1}^{nu} b+_j b_j, the U(nu) number operator.
inline BosonOperator b_number(int nu) {
  BosonOperator op;
  for (int j = 1; j <= nu; ++j) op += number(j);
  return op;
}

inline BosonOperator s_number() { return number(0); }

/// I+_nu = sum_{j=1}^{nu} b+_j b+_j.
inline BosonOperator pair_creation_nu(int nu) {
  BosonOperator op;
  for (int j = 1; j <= nu; ++j) op += BosonOperator::create(j) * BosonOperator::create(j);
  return op;
}

inline BosonOperator pair_annihilation_nu(int nu) {
  BosonOperator op;
  for (int j = 1; j <= nu; ++j) op += BosonOperator::annihilate(j) * BosonOperator::annihilate(j);
  return op;
}

/// I+_{nu+1} = s+s+ + I+_nu (standard) or s+s+ - I+_nu (barred).
inline BosonOperator pair_creation_nu1(int nu, Convention c = Convention::standard) {
  const BosonOperator ss = BosonOperator::create(0) * BosonOperator::create(0);
  return c == Convention::standard ? ss + pair_creation_nu(nu) : ss - pair_creation_nu(nu);
}

inline BosonOperator pair_annihilation_nu1(int nu, Convention c = Convention::standard) {
  const BosonOperator ss = BosonOperator::annihilate(0) * BosonOperator::annihilate(0);
  return c == Convention::standard ? ss + pair_annihilation_nu(nu) : ss - pair_annihilation_nu(nu);
}

/// G_jk = b+_j b_k.
inline BosonOperator generator(int j, int k) { return BosonOperator::create(j) * BosonOperator::annihilate(k); }

/// L_jk = i (b+_j b_k - b+_k b_j); with j = 0 this is the D_k generator.
inline BosonOperator angular(int j, int k) { return GaussianRational::i() * (generator(j, k) - generator(k, j)); }

/// D_j = i (s+ b_j - b+_j s).
inline BosonOperator dipole(int j) { return angular(0, j); }

/// Dbar_j = s+ b_j + b+_j s.
inline BosonOperator dipole_barred(int j) { return generator(0, j) + generator(j, 0); }

/// sum_{1<=j<k<=nu} L_jk^2, eigenvalue tau (tau + nu - 2).
inline BosonOperator casimir_so_nu(int nu) {
  BosonOperator op;
  for (int j = 1; j <= nu; ++j) {
    for (int k = j + 1; k <= nu; ++k) op += angular(j, k) * angular(j, k);
  }
  return op;
}

/// casimir_so_nu + sum_j D_j^2 (or Dbar_j^2), eigenvalue sigma (sigma + nu - 1).
inline BosonOperator casimir_so_nu1(int nu, Convention c = Convention::standard) {
  BosonOperator op = casimir_so_nu(nu);
  for (int j = 1; j <= nu; ++j) {
    const BosonOperator d = c == Convention::standard ? dipole(j) : dipole_barred(j);
    op += d * d;
  }
  return op;
}

/// Quasi-spin generators Q+ = I+_nu / 2, Q- = I_nu / 2, Q0 = (1/4) sum (b+b + b b+).
inline BosonOperator quasispin_plus(int nu) { return GaussianRational(Rational(1, 2)) * pair_creation_nu(nu); }
inline BosonOperator quasispin_minus(int nu) { return GaussianRational(Rational(1, 2)) * pair_annihilation_nu(nu); }
inline BosonOperator quasispin_zero(int nu) {
  BosonOperator op;
  for (int j = 1; j <= nu; ++j) {
    op += generator(j, j);
    op += BosonOperator::annihilate(j) * BosonOperator::create(j);
  }
  return GaussianRational(Rational(1, 4)) * op;
}

/// N-conserving pairing Q+ s s + s+ s+ Q-; connects n and n +- 2 at fixed N.
inline BosonOperator pairing(int nu) {
  const BosonOperator ss = BosonOperator::annihilate(0) * BosonOperator::annihilate(0);
  const BosonOperator ss_dag = BosonOperator::create(0) * BosonOperator::create(0);
  return quasispin_plus(nu) * ss + ss_dag * quasispin_minus(nu);
}

}  // namespace ops

/// Applies op `times` times.
inline FockState apply_power(const BosonOperator& op, int times, FockState psi) {
  for (int i = 0; i < times; ++i) psi = op.apply(psi);
  return psi;
}

// ---------------------------------------------------------------------------
// Basis construction

/// (b+_1 + i b+_2)^tau |0> for tau >= 0; the conjugate (b+_1 - i b+_2)^{|tau|} |0> for tau < 0 (nu = 2 only).
inline FockState seed_state(int nu, int tau) {
  require_dimension(nu);
  if (nu > 2 && tau < 0) throw LabelError("negative tau only exists for nu = 2");
  const GaussianRational phase = tau >= 0 ? GaussianRational::i() : -GaussianRational::i();
  const BosonOperator raise = BosonOperator::create(1) + phase * BosonOperator::create(2);
  return apply_power(raise, std::abs(tau), FockState::vacuum(nu + 1));
}

/// A basis state held as vector / sqrt(norm2): norm2 is the exact squared
/// norm of `vector`, so the represented state has unit norm.
struct OracleState {
  FockState vector;
  Rational norm2;
};

inline OracleState make_oracle_state(FockState v) {
  Rational n = tbrackets::norm2(v);
  if (n.is_zero()) throw OracleError("constructed basis state vanished");
  return {std::move(v), std::move(n)};
}

/// (-1)^{(n-|tau|)/2} (s+)^{N-n} (I+_nu)^{(n-|tau|)/2} seed.
inline OracleState build_chain1_state(int nu, int N, int n, int tau) {
  ChainILabel::make(nu, N, n, tau);
  const int pairs = (n - std::abs(tau)) / 2;
  FockState v = apply_power(ops::pair_creation_nu(nu), pairs, seed_state(nu, tau));
  v = apply_power(BosonOperator::create(0), N - n, std::move(v));
  if (pairs % 2 != 0) v *= GaussianRational(-1);
  return make_oracle_state(std::move(v));
}

/// Exact null space of a dense matrix over the Gaussian rationals.
inline std::vector<std::vector<GaussianRational>> null_space(std::vector<std::vector<GaussianRational>> rows,
                                                             std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const GaussianRational inv = GaussianRational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const GaussianRational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(cols);
    v[free] = GaussianRational(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coefficients c_k of the intrinsic state sum_k c_k (s+)^{sigma-|tau|-2k} (I+_nu)^k seed
/// annihilated by the SO(nu+1) pair annihilator, scaled so that c_0 = 1.
inline std::vector<Rational> intrinsic_coefficients(int nu, int sigma, int tau, Convention convention) {
  ChainIILabel::make(nu, sigma, sigma, tau);
  const int t = std::abs(tau);
  const int K = (sigma - t) / 2;
  const FockState seed = seed_state(nu, tau);
  const BosonOperator pair_nu = ops::pair_creation_nu(nu);
  const BosonOperator lower = ops::pair_annihilation_nu1(nu, convention);

  std::vector<FockState> images;
  FockState paired = seed;
  for (int k = 0; k <= K; ++k) {
    images.push_back(lower.apply(apply_power(BosonOperator::create(0), sigma - t - 2 * k, paired)));
    paired = pair_nu.apply(paired);
  }
  std::map<Occupation, std::size_t> row_of;
  for (const auto& img : images) {
    for (const auto& [occ, c] : img.terms()) row_of.try_emplace(occ, row_of.size());
  }
  std::vector<std::vector<GaussianRational>> rows(row_of.size(), std::vector<GaussianRational>(K + 1));
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (const auto& [occ, c] : images[k].terms()) rows[row_of.at(occ)][k] = c;
  }
  const auto kernel = null_space(std::move(rows), static_cast<std::size_t>(K + 1));
  if (kernel.size() != 1) {
    throw OracleError("pair-annihilator kernel has dimension " + std::to_string(kernel.size()) + " for (nu=" +
                      std::to_string(nu) + ", sigma=" + std::to_string(sigma) + ", tau=" + std::to_string(tau) + ")");
  }
  const auto& v = kernel.front();
  if (v[0].is_zero()) throw OracleError("intrinsic state has no (s+)^{sigma-tau} component");
  std::vector<Rational> out;
  for (const auto& x : v) {
    const GaussianRational c = x / v[0];
    if (!c.is_real()) throw OracleError("intrinsic coefficients are not real");
    out.push_back(c.re);
  }
  return out;
}

/// (-1)^{(N-sigma)/2} (I+_{nu+1})^{(N-sigma)/2} sum_k c_k (s+)^{sigma-|tau|-2k} (I+_nu)^k seed.
inline OracleState build_chain2_state(int nu, int N, int sigma, int tau, Convention convention = Convention::standard) {
  ChainIILabel::make(nu, N, sigma, tau);
  const int t = std::abs(tau);
  const auto coeffs = intrinsic_coefficients(nu, sigma, tau, convention);
  const BosonOperator pair_nu = ops::pair_creation_nu(nu);
  FockState intrinsic(nu + 1);
  FockState paired = seed_state(nu, tau);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    FockState term = apply_power(BosonOperator::create(0), sigma - t - 2 * static_cast<int>(k), paired);
    intrinsic += GaussianRational(coeffs[k]) * std::move(term);
    paired = pair_nu.apply(paired);
  }
  const int pairs = (N - sigma) / 2;
  FockState v = apply_power(ops::pair_creation_nu1(nu, convention), pairs, std::move(intrinsic));
  if (pairs % 2 != 0) v *= GaussianRational(-1);
  return make_oracle_state(std::move(v));
}

/// <a|op|b> between unit-norm oracle states, as an exact surd. The matrix
/// element must be real; its square is g^2 / (|a|^2 |b|^2).
inline SurdValue oracle_matrix_element(const OracleState& a, const BosonOperator& op, const OracleState& b) {
  const GaussianRational g = inner(a.vector, op.apply(b.vector));
  if (!g.is_real()) throw OracleError("matrix element has an imaginary part: " + g.to_string());
  return SurdValue(g.re.sign(), g.re * g.re / (a.norm2 * b.norm2));
}

/// <a|b> between unit-norm oracle states.
inline SurdValue oracle_overlap(const OracleState& a, const OracleState& b) {
  const GaussianRational g = inner(a.vector, b.vector);
  if (!g.is_real()) throw OracleError("overlap has an imaginary part: " + g.to_string());
  return SurdValue(g.re.sign(), g.re * g.re / (a.norm2 * b.norm2));
}

/// (sign, square) of <[N],n,tau|[N],sigma,tau>, packed as a SurdValue.
inline SurdValue oracle_bracket(int nu, int N, int n, int sigma, int tau, Convention convention = Convention::standard) {
  return oracle_overlap(build_chain1_state(nu, N, n, tau), build_chain2_state(nu, N, sigma, tau, convention));
}

/// Both bases of the fixed-(N, tau) block, indexed like BracketTable.
struct OracleBlock {
  int nu;
  int N;
  int tau;
  Convention convention;
  std::vector<int> n;
  std::vector<int> sigma;
  std::vector<OracleState> chain1;
  std::vector<OracleState> chain2;
};

inline OracleBlock oracle_block(int nu, int N, int tau, Convention convention = Convention::standard) {
  const auto idx = bracket_index_set(nu, N, tau);
  OracleBlock b{nu, N, tau, convention, idx.n, idx.sigma, {}, {}};
  for (int n : idx.n) b.chain1.push_back(build_chain1_state(nu, N, n, tau));
  for (int s : idx.sigma) b.chain2.push_back(build_chain2_state(nu, N, s, tau, convention));
  return b;
}

// ---------------------------------------------------------------------------
// Certification helpers

enum class CasimirGroup { so_nu, so_nu1 };

inline BosonOperator casimir_operator(int nu, CasimirGroup group, Convention convention = Convention::standard) {
  return group == CasimirGroup::so_nu ? ops::casimir_so_nu(nu) : ops::casimir_so_nu1(nu, convention);
}

/// Rayleigh quotient <psi|C|psi>/<psi|psi>.
inline Rational casimir_check(int nu, const FockState& psi, CasimirGroup group,
                              Convention convention = Convention::standard) {
  const Rational n = norm2(psi);
  if (n.is_zero()) throw DomainError("casimir_check on the zero state");
  const GaussianRational g = inner(psi, casimir_operator(nu, group, convention).apply(psi));
  if (!g.is_real()) throw OracleError("Casimir expectation is not real");
  return g.re / n;
}

/// op psi == value psi, compared monomial by monomial.
inline bool is_eigenstate(const BosonOperator& op, const FockState& psi, const Rational& value) {
  FockState lhs = op.apply(psi);
  lhs -= GaussianRational(value) * psi;
  return lhs.is_zero();
}

/// All monomials in `modes` modes with total boson number <= cutoff.
inline std::vector<Occupation> monomials_up_to(int modes, int cutoff) {
  std::vector<Occupation> out;
  Occupation occ(static_cast<std::size_t>(modes), 0);
  auto rec = [&](auto&& self, int mode, int left) -> void {
    if (mode == modes) {
      out.push_back(occ);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      occ[static_cast<std::size_t>(mode)] = k;
      self(self, mode + 1, left - k);
    }
    occ[static_cast<std::size_t>(mode)] = 0;
  };
  rec(rec, 0, cutoff);
  return out;
}

/// Operator identity lhs == rhs checked on every monomial up to the cutoff.
inline bool operators_agree(const BosonOperator& lhs, const BosonOperator& rhs, int modes, int cutoff) {
  for (const auto& occ : monomials_up_to(modes, cutoff)) {
    const FockState m = FockState::monomial(occ);
    if (!(lhs.apply(m) == rhs.apply(m))) return false;
  }
  return true;
}

/// Names of the failed identities; empty when everything holds:
///   [Q+, Q-] = -2 Q0, [Q0, Q+-] = +-Q+-, Q0 = (n + nu/2)/2,
///   [I+_nu, L_jk] = 0, [I+_{nu+1}, L_jk] = [I+_{nu+1}, D_j] = 0,
///   and the barred analogue [Ibar+_{nu+1}, Dbar_j] = 0.
inline std::vector<std::string> su11_commutator_failures(int nu, int cutoff) {
  require_dimension(nu);
  const int modes = nu + 1;
  const auto qp = ops::quasispin_plus(nu);
  const auto qm = ops::quasispin_minus(nu);
  const auto q0 = ops::quasispin_zero(nu);
  const BosonOperator zero;
  std::vector<std::string> failures;
  auto expect = [&](const std::string& name, const BosonOperator& lhs, const BosonOperator& rhs) {
    if (!operators_agree(lhs, rhs, modes, cutoff)) failures.push_back(name);
  };
  expect("[Q+,Q-] = -2 Q0", commutator(qp, qm), GaussianRational(-2) * q0);
  expect("[Q0,Q+] = Q+", commutator(q0, qp), qp);
  expect("[Q0,Q-] = -Q-", commutator(q0, qm), GaussianRational(-1) * qm);
  expect("Q0 = (n + nu/2)/2", q0,
         GaussianRational(Rational(1, 2)) * ops::b_number(nu) + BosonOperator::scalar(Rational(nu, 4)));
  const auto i_nu = ops::pair_creation_nu(nu);
  const auto i_nu1 = ops::pair_creation_nu1(nu, Convention::standard);
  const auto i_bar = ops::pair_creation_nu1(nu, Convention::barred);
  for (int j = 1; j <= nu; ++j) {
    for (int k = j + 1; k <= nu; ++k) {
      const auto l = ops::angular(j, k);
      const std::string jk = std::to_string(j) + std::to_string(k);
      expect("[I+_nu, L_" + jk + "] = 0", commutator(i_nu, l), zero);
      expect("[I+_nu+1, L_" + jk + "] = 0", commutator(i_nu1, l), zero);
      expect("[Ibar+_nu+1, L_" + jk + "] = 0", commutator(i_bar, l), zero);
    }
    expect("[I+_nu+1, D_" + std::to_string(j) + "] = 0", commutator(i_nu1, ops::dipole(j)), zero);
    expect("[Ibar+_nu+1, Dbar_" + std::to_string(j) + "] = 0", commutator(i_bar, ops::dipole_barred(j)), zero);
  }
  return failures;
}

inline bool su11_commutator_check(int nu, int cutoff) { return su11_commutator_failures(nu, cutoff).empty(); }

/// Norm of sum_k F_k (s+)^{sigma-tau-2k} (I+_{nu+1})^k |seed> with the seed
/// normalized; exactly 1 when the closed-form F_k are right.
inline Rational F_state_norm2(int nu, int sigma, int tau) {
  const int t = std::abs(tau);
  const int K = (sigma - t) / 2;
  const FockState seed = seed_state(nu, tau);
  const BosonOperator pair = ops::pair_creation_nu1(nu);
  FockState sum(nu + 1);
  FockState paired = seed;
  for (int k = 0; k <= K; ++k) {
    sum += GaussianRational(detail::f_rational(nu, sigma, t, k)) *
           apply_power(BosonOperator::create(0), sigma - t - 2 * k, paired);
    paired = pair.apply(paired);
  }
  return detail::f_prefactor_squared(nu, sigma, t) * norm2(sum) / norm2(seed);
}

}  // namespace tbrackets
