#pragma once

// File formats: bracket tables (JSON / CSV), transformed operator matrices
// (JSON) and oracle state dumps (JSON). Output is byte-reproducible: keys are
// emitted in a fixed order and entries in ascending label order.

#include <sstream>
#include <string>

#include <json.hpp>

#include "tbrackets/brackets.hpp"
#include "tbrackets/exactnum.hpp"
#include "tbrackets/fockoracle.hpp"
#include "tbrackets/transform.hpp"

namespace tbrackets {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// {sign, num, den, float}; num/den are the radicand as decimal strings.
inline Json surd_to_json(const SurdValue& s) {
  Json j;
  j["sign"] = s.sign();
  j["num"] = s.radicand().numerator().get_str();
  j["den"] = s.radicand().denominator().get_str();
  j["float"] = s.to_double();
  return j;
}

inline SurdValue surd_from_json(const Json& j) {
  return SurdValue(j.at("sign").get<int>(), Rational(Integer(j.at("num").get<std::string>()),
                                                     Integer(j.at("den").get<std::string>())));
}

inline Json table_to_json(const BracketTable& t) {
  Json out;
  out["header"] = {{"nu", t.nu},
                   {"N", t.N},
                   {"tau", t.tau},
                   {"convention", to_string(t.convention)},
                   {"format_version", kFormatVersion}};
  Json entries = Json::array();
  for (std::size_t r = 0; r < t.dimension(); ++r) {
    for (std::size_t c = 0; c < t.dimension(); ++c) {
      const SurdValue& v = t.at(r, c);
      entries.push_back({{"n", t.n[r]},
                         {"sigma", t.sigma[c]},
                         {"sign", v.sign()},
                         {"radicand_num", v.radicand().numerator().get_str()},
                         {"radicand_den", v.radicand().denominator().get_str()},
                         {"float", v.to_double()}});
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

/// Reads a table written by table_to_json; the exact fields are authoritative.
inline BracketTable table_from_json(const Json& j) {
  const auto& h = j.at("header");
  if (h.at("format_version").get<int>() != kFormatVersion) throw DomainError("unsupported table format_version");
  BracketTable t;
  t.nu = h.at("nu").get<int>();
  t.N = h.at("N").get<int>();
  t.tau = h.at("tau").get<int>();
  t.convention = parse_convention(h.at("convention").get<std::string>());
  const auto idx = bracket_index_set(t.nu, t.N, t.tau);
  t.n = idx.n;
  t.sigma = idx.sigma;
  t.entries.assign(idx.n.size(), std::vector<SurdValue>(idx.sigma.size()));
  const auto& entries = j.at("entries");
  if (entries.size() != idx.n.size() * idx.sigma.size()) throw DomainError("table has wrong number of entries");
  for (const auto& e : entries) {
    const auto find = [](const std::vector<int>& v, int x) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == x) return i;
      }
      throw DomainError("table entry label " + std::to_string(x) + " is inadmissible");
    };
    t.entries[find(idx.n, e.at("n").get<int>())][find(idx.sigma, e.at("sigma").get<int>())] =
        SurdValue(e.at("sign").get<int>(), Rational(Integer(e.at("radicand_num").get<std::string>()),
                                                    Integer(e.at("radicand_den").get<std::string>())));
  }
  return t;
}

inline constexpr const char* kCsvHeader = "nu,N,tau,n,sigma,sign,radicand_num,radicand_den,float";

inline std::string table_to_csv(const BracketTable& t) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (std::size_t r = 0; r < t.dimension(); ++r) {
    for (std::size_t c = 0; c < t.dimension(); ++c) {
      const SurdValue& v = t.at(r, c);
      os << t.nu << ',' << t.N << ',' << t.tau << ',' << t.n[r] << ',' << t.sigma[c] << ',' << v.sign() << ','
         << v.radicand().numerator().get_str() << ',' << v.radicand().denominator().get_str() << ','
         << render_float(v.to_double()) << '\n';
    }
  }
  return os.str();
}

/// Deformed-basis operator matrix: entries keyed by (sigma_row, sigma_col).
inline Json matrix_to_json(const SurdMatrix& m, OperatorKind kind, Convention convention) {
  Json out;
  out["header"] = {{"nu", m.nu},
                   {"N", m.N},
                   {"tau", m.tau},
                   {"operator", to_string(kind)},
                   {"convention", to_string(convention)},
                   {"basis", "deformed"},
                   {"format_version", kFormatVersion}};
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    for (std::size_t c = 0; c < m.dimension(); ++c) {
      const SurdValue& v = m.at(r, c);
      entries.push_back({{"sigma_row", m.rows[r]},
                         {"sigma_col", m.cols[c]},
                         {"exact", v.to_string()},
                         {"sign", v.sign()},
                         {"radicand_num", v.radicand().numerator().get_str()},
                         {"radicand_den", v.radicand().denominator().get_str()},
                         {"float", v.to_double()}});
    }
  }
  out["entries"] = std::move(entries);
  return out;
}

/// [{occ: [...], re: "p/q", im: "p/q"}, ...] in monomial order.
inline Json fock_state_to_json(const FockState& psi) {
  Json out = Json::array();
  for (const auto& [occ, c] : psi.terms()) {
    out.push_back({{"occ", occ}, {"re", c.re.to_string()}, {"im", c.im.to_string()}});
  }
  return out;
}

inline FockState fock_state_from_json(const Json& j) {
  FockState psi;
  for (const auto& t : j) {
    psi.add(t.at("occ").get<Occupation>(),
            GaussianRational(Rational::parse(t.at("re").get<std::string>()),
                             Rational::parse(t.at("im").get<std::string>())));
  }
  return psi;
}

}  // namespace tbrackets
