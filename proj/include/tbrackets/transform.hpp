#pragma once

// Two-step evaluation of matrix elements in the deformed basis:
//
//   <[N],s',tau| T |[N],s,tau> = sum_{n',n} c^tau_{n's'} c^tau_{ns} <[N],n',tau| T |[N],n,tau>
//
// Only SO(nu)-scalar, N-conserving operators are supported, so the transform
// never leaves a fixed-(N, tau) block.

#include <string>
#include <vector>

#include "tbrackets/brackets.hpp"
#include "tbrackets/exactnum.hpp"
#include "tbrackets/fockoracle.hpp"
#include "tbrackets/labels.hpp"

namespace tbrackets {

enum class OperatorKind {
  b_number,  // sum_{j>=1} b+_j b_j
  s_number,  // s+ s
  pairing,   // Q+ s s + s+ s+ Q-
};

inline const char* to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::b_number: return "bnum";
    case OperatorKind::s_number: return "snum";
    case OperatorKind::pairing: return "pair";
  }
  return "?";
}

inline OperatorKind parse_operator_kind(const std::string& s) {
  if (s == "bnum") return OperatorKind::b_number;
  if (s == "snum") return OperatorKind::s_number;
  if (s == "pair") return OperatorKind::pairing;
  throw DomainError("unsupported operator '" + s + "' (expected bnum, snum or pair)");
}

inline BosonOperator boson_operator(int nu, OperatorKind k) {
  switch (k) {
    case OperatorKind::b_number: return ops::b_number(nu);
    case OperatorKind::s_number: return ops::s_number();
    case OperatorKind::pairing: return ops::pairing(nu);
  }
  throw DomainError("unsupported operator kind");
}

/// Square matrix of surds with row/column labels (n or sigma).
struct SurdMatrix {
  int nu = 2;
  int N = 0;
  int tau = 0;
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<std::vector<SurdValue>> entries;

  std::size_t dimension() const { return rows.size(); }
  const SurdValue& at(std::size_t r, std::size_t c) const { return entries.at(r).at(c); }

  bool is_symmetric() const {
    for (std::size_t r = 0; r < entries.size(); ++r) {
      for (std::size_t c = r + 1; c < entries.size(); ++c) {
        if (entries[r][c] != entries[c][r]) return false;
      }
    }
    return true;
  }

  /// Exact trace; throws SurdAdditionError if the diagonal is incommensurable.
  SurdValue trace() const {
    SurdSum s;
    for (std::size_t i = 0; i < entries.size(); ++i) s += entries[i][i];
    return s.to_surd();
  }

  friend bool operator==(const SurdMatrix&, const SurdMatrix&) = default;
};

namespace detail {

/// <n+2, tau| Q+ |n, tau> in the U(nu) > SO(nu) basis, from the quasi-spin
/// ladder with the (-1)^{q0-q} phase: -sqrt((q0 - q + 1)(q0 + q)).
inline SurdValue quasispin_raise(int nu, int n, int tau) {
  const auto ql = quasispin_labels(nu, n, tau);
  return SurdValue(-1, (ql.q0 - ql.q + Rational(1)) * (ql.q0 + ql.q));
}

inline SurdMatrix empty_matrix(int nu, int N, int tau, const std::vector<int>& labels) {
  SurdMatrix m{nu, N, tau, labels, labels, {}};
  m.entries.assign(labels.size(), std::vector<SurdValue>(labels.size()));
  return m;
}

}  // namespace detail

/// <[N],n',tau| T |[N],n,tau> from closed forms (number operators are
/// diagonal; pairing uses the quasi-spin ladder times sqrt(m (m-1)) for s s).
inline SurdMatrix spherical_matrix(int nu, int N, int tau, OperatorKind kind) {
  const auto idx = bracket_index_set(nu, N, tau);
  SurdMatrix m = detail::empty_matrix(nu, N, tau, idx.n);
  for (std::size_t i = 0; i < idx.n.size(); ++i) {
    const int n = idx.n[i];
    switch (kind) {
      case OperatorKind::b_number: m.entries[i][i] = SurdValue::from_rational(n); break;
      case OperatorKind::s_number: m.entries[i][i] = SurdValue::from_rational(N - n); break;
      case OperatorKind::pairing:
        if (i + 1 < idx.n.size()) {
          const SurdValue up =
              detail::quasispin_raise(nu, n, tau) * SurdValue::sqrt_of(Rational((N - n) * (N - n - 1)));
          m.entries[i + 1][i] = up;
          m.entries[i][i + 1] = up;
        }
        break;
    }
  }
  return m;
}

/// Same matrix from Fock-space inner products of the oracle chain-I states.
inline SurdMatrix spherical_matrix_oracle(int nu, int N, int tau, OperatorKind kind) {
  const auto idx = bracket_index_set(nu, N, tau);
  const BosonOperator op = boson_operator(nu, kind);
  std::vector<OracleState> states;
  for (int n : idx.n) states.push_back(build_chain1_state(nu, N, n, tau));
  SurdMatrix m = detail::empty_matrix(nu, N, tau, idx.n);
  for (std::size_t r = 0; r < states.size(); ++r) {
    for (std::size_t c = 0; c < states.size(); ++c) m.entries[r][c] = oracle_matrix_element(states[r], op, states[c]);
  }
  return m;
}

/// C^T M C with C the bracket table; rows/cols are sigma ascending. Each entry
/// is accumulated as a SurdSum and must collapse to a single surd.
inline SurdMatrix deformed_matrix(int nu, int N, int tau, OperatorKind kind,
                                  Convention convention = Convention::standard) {
  const BracketTable c = table(nu, N, tau, convention);
  const SurdMatrix sph = spherical_matrix(nu, N, tau, kind);
  const std::size_t d = c.dimension();
  SurdMatrix m = detail::empty_matrix(nu, N, tau, c.sigma);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      SurdSum acc;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (sph.entries[i][j].is_zero()) continue;
          acc += c.entries[i][a] * sph.entries[i][j] * c.entries[j][b];
        }
      }
      m.entries[a][b] = acc.to_surd();
    }
  }
  return m;
}

/// <[N],sigma',tau| T |[N],sigma,tau> directly from oracle chain-II states.
inline SurdMatrix deformed_matrix_oracle(int nu, int N, int tau, OperatorKind kind,
                                         Convention convention = Convention::standard) {
  const auto idx = bracket_index_set(nu, N, tau);
  const BosonOperator op = boson_operator(nu, kind);
  std::vector<OracleState> states;
  for (int s : idx.sigma) states.push_back(build_chain2_state(nu, N, s, tau, convention));
  SurdMatrix m = detail::empty_matrix(nu, N, tau, idx.sigma);
  for (std::size_t r = 0; r < states.size(); ++r) {
    for (std::size_t c = 0; c < states.size(); ++c) m.entries[r][c] = oracle_matrix_element(states[r], op, states[c]);
  }
  return m;
}

}  // namespace tbrackets
