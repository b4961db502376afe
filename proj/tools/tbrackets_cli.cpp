// tbrackets: transformation brackets between U(nu+1) > U(nu) > SO(nu) and
// U(nu+1) > SO(nu+1) > SO(nu).
//
// Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tbrackets/tbrackets.hpp"

namespace {

using namespace tbrackets;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kVerification = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush()) throw IoError("failed writing '" + path + "'");
}

/// Status lines go to stdout unless stdout carries the data.
std::ostream& status_stream(const std::string& out_path) {
  return out_path.empty() || out_path == "-" ? std::cerr : std::cout;
}

struct BracketArgs {
  int nu = 2, N = 0, n = 0, sigma = 0, tau = 0;
  std::string convention = "standard";
  bool pochhammer = false;
  bool json = false;
};

int run_bracket(const BracketArgs& a) {
  const Convention c = parse_convention(a.convention);
  SurdValue v;
  if (a.pochhammer) {
    v = bracket_pochhammer(a.nu, a.N, a.n, a.sigma, a.tau);
    if (c == Convention::barred && ((a.n - std::abs(a.tau)) / 2) % 2 != 0) v = -v;
  } else {
    v = bracket(a.nu, a.N, a.n, a.sigma, a.tau, c);
  }
  if (a.json) {
    std::cout << surd_to_json(v).dump(2) << '\n';
  } else {
    std::cout << render_surd(v) << '\n';
  }
  return kOk;
}

struct TableArgs {
  int nu = 2, N = 0, tau = 0;
  std::string convention = "standard";
  std::string out;
  std::string format = "json";
};

int run_table(const TableArgs& a) {
  const BracketTable t = table(a.nu, a.N, a.tau, parse_convention(a.convention));
  auto& status = status_stream(a.out);
  if (!t.is_orthogonal()) {
    status << "orthogonality: FAIL (d=" << t.dimension() << "); table not written\n";
    return kVerification;
  }
  write_output(a.out, a.format == "csv" ? table_to_csv(t) : table_to_json(t).dump(2) + "\n");
  status << "orthogonality: PASS (exact, d=" << t.dimension() << ")\n";
  return kOk;
}

struct VerifyArgs {
  int nu_min = 2, nu_max = 3, N_max = 6;
  std::vector<std::string> suites{"orth", "poch", "sigmaN", "oracle", "gegenbauer", "su11", "barred", "transform"};
};

int run_verify(const VerifyArgs& a) {
  const VerifyRange range{a.nu_min, a.nu_max, 0, a.N_max};
  bool all = true;
  std::size_t total = 0;
  for (const auto& name : a.suites) {
    const SuiteReport rep = run_suite(name, range);
    std::cout << rep.summary() << '\n';
    total += rep.checked;
    all = all && rep.passed();
  }
  std::cout << (all ? "PASS 100% (" : "FAIL (") << total << " labels)\n";
  return all ? kOk : kVerification;
}

struct TransformArgs {
  int nu = 2, N = 0, tau = 0;
  std::string op = "bnum";
  std::string convention = "standard";
  std::string out;
  bool certify = false;
};

int run_transform(const TransformArgs& a) {
  const OperatorKind kind = parse_operator_kind(a.op);
  const Convention c = parse_convention(a.convention);
  const SurdMatrix m = deformed_matrix(a.nu, a.N, a.tau, kind, c);
  auto& status = status_stream(a.out);
  if (a.certify) {
    if (!(m == deformed_matrix_oracle(a.nu, a.N, a.tau, kind, c))) {
      status << "oracle certification: FAIL; matrix not written\n";
      return kVerification;
    }
  }
  write_output(a.out, matrix_to_json(m, kind, c).dump(2) + "\n");
  if (a.certify) status << "oracle certification: PASS (exact, d=" << m.dimension() << ")\n";
  return kOk;
}

struct StateArgs {
  int nu = 2, N = 0, label = 0, tau = 0, chain = 1;
  std::string convention = "standard";
  std::string out;
};

int run_state(const StateArgs& a) {
  const OracleState s = a.chain == 1 ? build_chain1_state(a.nu, a.N, a.label, a.tau)
                                     : build_chain2_state(a.nu, a.N, a.label, a.tau, parse_convention(a.convention));
  Json j;
  j["norm2"] = s.norm2.to_string();
  j["terms"] = fock_state_to_json(s.vector);
  write_output(a.out, j.dump(2) + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact transformation brackets between the spherical and deformed U(nu+1) chains"};
  app.require_subcommand(1);

  BracketArgs ba;
  auto* bracket_cmd = app.add_subcommand("bracket", "Single bracket c^tau_{n sigma}");
  bracket_cmd->add_option("--nu", ba.nu, "Dimension nu >= 2")->required();
  bracket_cmd->add_option("--N", ba.N, "Total boson number")->required();
  bracket_cmd->add_option("--n", ba.n, "U(nu) label")->required();
  bracket_cmd->add_option("--sigma", ba.sigma, "SO(nu+1) label")->required();
  bracket_cmd->add_option("--tau", ba.tau, "SO(nu) label")->required();
  bracket_cmd->add_option("--convention", ba.convention, "standard | barred")
      ->check(CLI::IsMember({"standard", "barred"}));
  bracket_cmd->add_flag("--pochhammer", ba.pochhammer, "Evaluate through the Pochhammer form");
  bracket_cmd->add_flag("--json", ba.json, "Print the serialized {sign,num,den,float} record");

  TableArgs ta;
  auto* table_cmd = app.add_subcommand("table", "Full orthogonal bracket table for fixed (nu, N, tau)");
  table_cmd->add_option("--nu", ta.nu)->required();
  table_cmd->add_option("--N", ta.N)->required();
  table_cmd->add_option("--tau", ta.tau)->required();
  table_cmd->add_option("--convention", ta.convention)->check(CLI::IsMember({"standard", "barred"}));
  table_cmd->add_option("--out", ta.out, "Output file (default stdout)");
  table_cmd->add_option("--format", ta.format)->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run certification suites over a label range");
  verify_cmd->add_option("--nu-min", va.nu_min);
  verify_cmd->add_option("--nu-max", va.nu_max);
  verify_cmd->add_option("--N-max", va.N_max);
  verify_cmd->add_option("--suites", va.suites, "Comma-separated suite names")
      ->delimiter(',')
      ->check(CLI::IsMember(known_suites()));

  TransformArgs xa;
  auto* transform_cmd = app.add_subcommand("transform", "Operator matrix in the deformed basis (two-step)");
  transform_cmd->add_option("--nu", xa.nu)->required();
  transform_cmd->add_option("--N", xa.N)->required();
  transform_cmd->add_option("--tau", xa.tau)->required();
  transform_cmd->add_option("--op", xa.op, "bnum | snum | pair")->check(CLI::IsMember({"bnum", "snum", "pair"}));
  transform_cmd->add_option("--convention", xa.convention)->check(CLI::IsMember({"standard", "barred"}));
  transform_cmd->add_option("--out", xa.out, "Output file (default stdout)");
  transform_cmd->add_flag("--certify", xa.certify, "Compare against direct Fock-space matrix elements");

  StateArgs sa;
  auto* state_cmd = app.add_subcommand("state", "Dump an oracle basis state as JSON");
  state_cmd->add_option("--nu", sa.nu)->required();
  state_cmd->add_option("--N", sa.N)->required();
  state_cmd->add_option("--label", sa.label, "n (chain 1) or sigma (chain 2)")->required();
  state_cmd->add_option("--tau", sa.tau)->required();
  state_cmd->add_option("--chain", sa.chain)->check(CLI::IsMember({1, 2}));
  state_cmd->add_option("--convention", sa.convention)->check(CLI::IsMember({"standard", "barred"}));
  state_cmd->add_option("--out", sa.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    if (*bracket_cmd) return run_bracket(ba);
    if (*table_cmd) return run_table(ta);
    if (*verify_cmd) return run_verify(va);
    if (*transform_cmd) return run_transform(xa);
    if (*state_cmd) return run_state(sa);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerification;
  }
  return kValidation;
}
