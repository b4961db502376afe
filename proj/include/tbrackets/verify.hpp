#pragma once

/**
 * @file verify.hpp
 * @brief Certification suites over ranges of (nu, N, tau).
 *
 * Every check is exact. A suite counts the label tuples it examined, the
 * number that failed, and keeps a description of the first failure
 * (label tuple plus both values).
 */

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "tbrackets/brackets.hpp"
#include "tbrackets/fockoracle.hpp"
#include "tbrackets/labels.hpp"
#include "tbrackets/transform.hpp"

namespace tbrackets {

struct VerifyRange {
  int nu_min = 2;
  int nu_max = 3;
  int N_min = 0;
  int N_max = 6;
};

struct SuiteReport {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = describe();
  }

  /// "PASS 100% (n labels)" or "FAIL k/n labels; first: ...".
  std::string summary() const {
    if (passed()) return name + ": PASS 100% (" + std::to_string(checked) + " labels)";
    return name + ": FAIL " + std::to_string(failed) + "/" + std::to_string(checked) +
           " labels; first failure: " + first_failure;
  }
};

namespace detail {

inline std::vector<int> admissible_taus(int nu, int N) {
  std::vector<int> out;
  for (int t = nu == 2 ? -N : 0; t <= N; ++t) out.push_back(t);
  return out;
}

inline std::string labels_text(int nu, int N, int n, int sigma, int tau) {
  return "(nu=" + std::to_string(nu) + ", N=" + std::to_string(N) + ", n=" + std::to_string(n) +
         ", sigma=" + std::to_string(sigma) + ", tau=" + std::to_string(tau) + ")";
}

inline std::string block_text(int nu, int N, int tau) {
  return "(nu=" + std::to_string(nu) + ", N=" + std::to_string(N) + ", tau=" + std::to_string(tau) + ")";
}

template <typename F>
void for_each_block(const VerifyRange& r, F&& f) {
  for (int nu = r.nu_min; nu <= r.nu_max; ++nu) {
    for (int N = r.N_min; N <= r.N_max; ++N) {
      for (int tau : admissible_taus(nu, N)) f(nu, N, tau);
    }
  }
}

inline std::string mismatch(const std::string& where, const SurdValue& a, const SurdValue& b) {
  return where + ": " + a.to_string() + " vs " + b.to_string();
}

}  // namespace detail

/// Bracket tables are exactly orthogonal (rows and columns), both conventions.
inline SuiteReport verify_orthogonality(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "orth";
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    for (Convention c : {Convention::standard, Convention::barred}) {
      rep.record(table(nu, N, tau, c).is_orthogonal(),
                 [&] { return detail::block_text(nu, N, tau) + " " + to_string(c) + " table not orthogonal"; });
    }
  });
  return rep;
}

/// Overlap form == expanded form == Pochhammer form on every entry.
inline SuiteReport verify_pochhammer(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "poch";
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    const auto idx = bracket_index_set(nu, N, tau);
    for (int n : idx.n) {
      for (int s : idx.sigma) {
        const SurdValue a = bracket(nu, N, n, s, tau);
        const SurdValue b = bracket_expanded(nu, N, n, s, tau);
        const SurdValue c = bracket_pochhammer(nu, N, n, s, tau);
        rep.record(a == b && b == c, [&] {
          return detail::labels_text(nu, N, n, s, tau) + ": overlap " + a.to_string() + ", expanded " +
                 b.to_string() + ", pochhammer " + c.to_string();
        });
      }
    }
  });
  return rep;
}

/// The summed sigma = N form equals the general bracket and is never negative.
inline SuiteReport verify_sigma_eq_N(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "sigmaN";
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    for (int n : bracket_index_set(nu, N, tau).n) {
      const SurdValue general = bracket(nu, N, n, N, tau);
      const SurdValue special = bracket_sigma_eq_N(nu, N, n, tau);
      rep.record(general == special && special.sign() > 0,
                 [&] { return detail::mismatch(detail::labels_text(nu, N, n, N, tau), general, special); });
    }
  });
  return rep;
}

/// Closed form (sign, radicand) == oracle (sign, square), standard and barred.
inline SuiteReport verify_oracle(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "oracle";
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    for (Convention c : {Convention::standard, Convention::barred}) {
      const OracleBlock block = oracle_block(nu, N, tau, c);
      for (std::size_t i = 0; i < block.n.size(); ++i) {
        for (std::size_t j = 0; j < block.sigma.size(); ++j) {
          const SurdValue closed = bracket(nu, N, block.n[i], block.sigma[j], tau, c);
          const SurdValue oracle = oracle_overlap(block.chain1[i], block.chain2[j]);
          rep.record(closed == oracle, [&] {
            return detail::mismatch(detail::labels_text(nu, N, block.n[i], block.sigma[j], tau) + " " + to_string(c),
                                    closed, oracle);
          });
        }
      }
    }
  });
  return rep;
}

/// Oracle basis states are exact eigenstates of their labelling operators and
/// distinct labels within a chain are orthogonal.
inline SuiteReport verify_casimir(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "casimir";
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    const int t = std::abs(tau);
    const auto number = ops::total_number(nu);
    const auto bnum = ops::b_number(nu);
    const auto c_nu = ops::casimir_so_nu(nu);
    for (Convention c : {Convention::standard, Convention::barred}) {
      const auto c_nu1 = ops::casimir_so_nu1(nu, c);
      const OracleBlock block = oracle_block(nu, N, tau, c);
      for (std::size_t j = 0; j < block.sigma.size(); ++j) {
        const int s = block.sigma[j];
        const FockState& psi = block.chain2[j].vector;
        const bool ok = is_eigenstate(number, psi, N) && is_eigenstate(c_nu1, psi, s * (s + nu - 1)) &&
                        is_eigenstate(c_nu, psi, t * (t + nu - 2));
        rep.record(ok, [&] {
          return "chain-II state " + detail::labels_text(nu, N, -1, s, tau) + " " + to_string(c) +
                 " is not an eigenstate of N, C_SO(nu+1), C_SO(nu)";
        });
        for (std::size_t k = j + 1; k < block.sigma.size(); ++k) {
          rep.record(inner(psi, block.chain2[k].vector).is_zero(),
                     [&] { return "chain-II states sigma=" + std::to_string(s) + "," +
                                  std::to_string(block.sigma[k]) + " not orthogonal " + detail::block_text(nu, N, tau); });
        }
      }
      if (c == Convention::barred) continue;
      for (std::size_t i = 0; i < block.n.size(); ++i) {
        const int n = block.n[i];
        const FockState& psi = block.chain1[i].vector;
        const bool ok = is_eigenstate(number, psi, N) && is_eigenstate(bnum, psi, n) &&
                        is_eigenstate(c_nu, psi, t * (t + nu - 2));
        rep.record(ok, [&] {
          return "chain-I state " + detail::labels_text(nu, N, n, -1, tau) + " is not an eigenstate of N, n, C_SO(nu)";
        });
        for (std::size_t k = i + 1; k < block.n.size(); ++k) {
          rep.record(inner(psi, block.chain1[k].vector).is_zero(),
                     [&] { return "chain-I states n=" + std::to_string(n) + "," + std::to_string(block.n[k]) +
                                  " not orthogonal " + detail::block_text(nu, N, tau); });
        }
      }
    }
  });
  return rep;
}

/// F_k from the Gegenbauer expansion equals the closed form, for
/// 0 <= tau <= tau_max and 0 <= sigma - tau <= span_max.
inline SuiteReport verify_gegenbauer(int nu_min, int nu_max, int tau_max, int span_max = 10) {
  SuiteReport rep;
  rep.name = "gegenbauer";
  for (int nu = nu_min; nu <= nu_max; ++nu) {
    for (int tau = 0; tau <= tau_max; ++tau) {
      for (int span = 0; span <= span_max; ++span) {
        rep.record(verify_F_via_gegenbauer(nu, tau + span, tau), [&] {
          return "(nu=" + std::to_string(nu) + ", sigma=" + std::to_string(tau + span) +
                 ", tau=" + std::to_string(tau) + ") Gegenbauer F_k disagree with closed form";
        });
      }
    }
  }
  return rep;
}

/// The state sum_k F_k (s+)^{sigma-tau-2k} (I+_{nu+1})^k |seed> has unit norm.
inline SuiteReport verify_F_norm(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "fnorm";
  for (int nu = r.nu_min; nu <= r.nu_max; ++nu) {
    for (int sigma = 0; sigma <= r.N_max; ++sigma) {
      for (int tau = 0; tau <= sigma; ++tau) {
        const Rational n2 = F_state_norm2(nu, sigma, tau);
        rep.record(n2 == Rational(1), [&] {
          return "(nu=" + std::to_string(nu) + ", sigma=" + std::to_string(sigma) + ", tau=" + std::to_string(tau) +
                 ") norm^2 = " + n2.to_string();
        });
      }
    }
  }
  return rep;
}

/// Quasi-spin commutators and pair-operator centralizers at boson cutoff N_max.
inline SuiteReport verify_su11(const std::vector<int>& nus, int cutoff) {
  SuiteReport rep;
  rep.name = "su11";
  for (int nu : nus) {
    const auto failures = su11_commutator_failures(nu, cutoff);
    rep.record(failures.empty(), [&] {
      return "nu=" + std::to_string(nu) + ", cutoff=" + std::to_string(cutoff) + ": " + failures.front();
    });
  }
  return rep;
}

inline SuiteReport verify_su11(const VerifyRange& r) {
  std::vector<int> nus;
  for (int nu = r.nu_min; nu <= r.nu_max; ++nu) nus.push_back(nu);
  return verify_su11(nus, r.N_max);
}

/// Barred entry == (-1)^{(n-|tau|)/2} x standard entry (closed form), and the
/// oracle built with the barred pair operator reproduces the same rule.
inline SuiteReport verify_barred(const VerifyRange& r, bool with_oracle = true) {
  SuiteReport rep;
  rep.name = "barred";
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    const auto idx = bracket_index_set(nu, N, tau);
    std::vector<SurdValue> oracle_std, oracle_bar;
    if (with_oracle) {
      const OracleBlock bs = oracle_block(nu, N, tau, Convention::standard);
      const OracleBlock bb = oracle_block(nu, N, tau, Convention::barred);
      for (std::size_t i = 0; i < idx.n.size(); ++i) {
        for (std::size_t j = 0; j < idx.sigma.size(); ++j) {
          oracle_std.push_back(oracle_overlap(bs.chain1[i], bs.chain2[j]));
          oracle_bar.push_back(oracle_overlap(bb.chain1[i], bb.chain2[j]));
        }
      }
    }
    std::size_t cell = 0;
    for (int n : idx.n) {
      const int flip = ((n - std::abs(tau)) / 2) % 2 == 0 ? 1 : -1;
      for (int s : idx.sigma) {
        const SurdValue st = bracket(nu, N, n, s, tau, Convention::standard);
        const SurdValue ba = bracket(nu, N, n, s, tau, Convention::barred);
        const SurdValue expected = flip > 0 ? st : -st;
        rep.record(ba == expected,
                   [&] { return detail::mismatch(detail::labels_text(nu, N, n, s, tau) + " closed", ba, expected); });
        if (with_oracle) {
          const SurdValue& os = oracle_std[cell];
          const SurdValue& ob = oracle_bar[cell];
          const SurdValue oracle_expected = flip > 0 ? os : -os;
          rep.record(ob == oracle_expected, [&] {
            return detail::mismatch(detail::labels_text(nu, N, n, s, tau) + " oracle", ob, oracle_expected);
          });
        }
        ++cell;
      }
    }
  });
  return rep;
}

/// Two-step transform == direct oracle matrix elements; spherical closed form
/// == spherical oracle; trace preserved; bnum + snum = N * 1; symmetric.
inline SuiteReport verify_transform(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "transform";
  const OperatorKind kinds[] = {OperatorKind::b_number, OperatorKind::s_number, OperatorKind::pairing};
  detail::for_each_block(r, [&](int nu, int N, int tau) {
    const std::string where = detail::block_text(nu, N, tau);
    for (OperatorKind k : kinds) {
      const SurdMatrix sph = spherical_matrix(nu, N, tau, k);
      const SurdMatrix sph_oracle = spherical_matrix_oracle(nu, N, tau, k);
      rep.record(sph == sph_oracle,
                 [&] { return where + " " + to_string(k) + ": spherical closed form differs from oracle"; });
      for (Convention c : {Convention::standard, Convention::barred}) {
        const std::string tag = where + " " + to_string(k) + " " + to_string(c);
        const SurdMatrix two_step = deformed_matrix(nu, N, tau, k, c);
        const SurdMatrix direct = deformed_matrix_oracle(nu, N, tau, k, c);
        rep.record(two_step == direct, [&] { return tag + ": two-step result differs from oracle"; });
        rep.record(two_step.trace() == sph.trace(), [&] {
          return detail::mismatch(tag + ": trace", two_step.trace(), sph.trace());
        });
        rep.record(two_step.is_symmetric(), [&] { return tag + ": not symmetric"; });
      }
    }
    for (Convention c : {Convention::standard, Convention::barred}) {
      const SurdMatrix b = deformed_matrix(nu, N, tau, OperatorKind::b_number, c);
      const SurdMatrix s = deformed_matrix(nu, N, tau, OperatorKind::s_number, c);
      bool ok = true;
      for (std::size_t i = 0; i < b.dimension(); ++i) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
          SurdSum sum;
          sum += b.at(i, j);
          sum += s.at(i, j);
          ok = ok && sum.to_surd() == (i == j ? SurdValue::from_rational(N) : SurdValue::zero());
        }
      }
      rep.record(ok, [&] { return where + " " + to_string(c) + ": bnum + snum != N * 1"; });
    }
  });
  return rep;
}

/// |chain-I basis| == |chain-II basis| for every (nu, N), and per tau.
inline SuiteReport verify_dimensions(const VerifyRange& r) {
  SuiteReport rep;
  rep.name = "dims";
  for (int nu = r.nu_min; nu <= r.nu_max; ++nu) {
    for (int N = r.N_min; N <= r.N_max; ++N) {
      const auto c1 = enumerate_chain1(nu, N);
      const auto c2 = enumerate_chain2(nu, N);
      rep.record(c1.size() == c2.size(), [&] {
        return "(nu=" + std::to_string(nu) + ", N=" + std::to_string(N) + ") " + std::to_string(c1.size()) +
               " chain-I vs " + std::to_string(c2.size()) + " chain-II labels";
      });
      for (int tau : detail::admissible_taus(nu, N)) {
        std::size_t a = 0, b = 0;
        for (const auto& l : c1) a += l.tau == tau ? 1 : 0;
        for (const auto& l : c2) b += l.tau == tau ? 1 : 0;
        const auto idx = bracket_index_set(nu, N, tau);
        rep.record(a == b && a == idx.dimension() && idx.n.size() == idx.sigma.size(), [&] {
          return detail::block_text(nu, N, tau) + ": block sizes " + std::to_string(a) + " vs " + std::to_string(b);
        });
      }
    }
  }
  return rep;
}

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"orth",   "poch",  "sigmaN", "oracle", "casimir", "gegenbauer",
                                              "fnorm", "su11", "barred", "transform", "dims"};
  return names;
}

/// Runs a named suite over the range (gegenbauer: tau <= N_max, sigma - tau <= 10;
/// su11: cutoff N_max).
inline SuiteReport run_suite(const std::string& name, const VerifyRange& r) {
  if (name == "orth") return verify_orthogonality(r);
  if (name == "poch") return verify_pochhammer(r);
  if (name == "sigmaN") return verify_sigma_eq_N(r);
  if (name == "oracle") return verify_oracle(r);
  if (name == "casimir") return verify_casimir(r);
  if (name == "gegenbauer") return verify_gegenbauer(r.nu_min, r.nu_max, r.N_max);
  if (name == "fnorm") return verify_F_norm(r);
  if (name == "su11") return verify_su11(r);
  if (name == "barred") return verify_barred(r);
  if (name == "transform") return verify_transform(r);
  if (name == "dims") return verify_dimensions(r);
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace tbrackets
