#include "scycle/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scycle/errors.hpp"
#include "scycle/generators.hpp"
#include "scycle/instance.hpp"
#include "scycle/oracle.hpp"
#include "scycle/report.hpp"
#include "scycle/solver.hpp"

namespace scycle {

namespace {

void write_to(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ReportError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void print_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  out << '\n';
}

struct SolveArgs {
  std::string instance;
  std::string out;
  bool trace = false;
  bool text = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    inst = parse_instance_file(a.instance);
  } catch (const ParseError& e) {
    err << a.instance << ": " << e.what() << '\n';
    return kExitInputError;
  }
  const auto start = std::chrono::steady_clock::now();
  const auto result = solve(inst.graph(), inst.terminal_set(), inst.k, inst.ell);
  const std::chrono::duration<double, std::milli> wall = std::chrono::steady_clock::now() - start;
  const std::string text = a.text ? report_text(inst, result)
                                  : report_json(inst, result, {.trace = a.trace, .wall_ms = wall.count()});
  write_to(a.out, text, out);
  return is_packing(result.outcome) ? kExitPacking : kExitHittingSet;
}

struct VerifyArgs {
  std::string instance;
  std::string report;
  std::size_t cap = kOracleCap;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst;
  ParsedReport rep;
  try {
    inst = parse_instance_file(a.instance);
    rep = parse_report(read_file(a.report));
  } catch (const ParseError& e) {
    err << a.instance << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const ReportError& e) {
    err << a.report << ": " << e.what() << '\n';
    return kExitInputError;
  }
  auto fail = [&](const std::string& clause) {
    out << "FAIL " << clause << '\n';
    return kExitFail;
  };
  if (rep.fingerprint != inst.fingerprint())
    return fail("fingerprint: report is for instance " + fingerprint_hex(rep.fingerprint) + ", not " +
                fingerprint_hex(inst.fingerprint()));
  if (rep.k != inst.k || rep.ell != inst.ell) return fail("parameters: report k/ell differ from instance");
  SolveOutcome outcome;
  if (rep.packing) {
    Packing p;
    for (const auto& seq : rep.cycles) {
      try {
        p.cycles.emplace_back(seq);
      } catch (const std::invalid_argument&) {
        return fail("not a cycle of G");
      }
    }
    outcome = std::move(p);
  } else {
    VertexSet x(inst.n);
    for (Vertex v : rep.hitting_set) {
      if (v < 0 || static_cast<std::size_t>(v) >= inst.n)
        return fail("hitting set vertex " + std::to_string(v) + " is not in G");
      x.insert(v);
    }
    outcome = HittingSet{x};
  }
  const auto verdict = verify_outcome(inst.graph(), inst.terminal_set(), inst.k, inst.ell, outcome, a.cap);
  if (!verdict.pass) return fail(verdict.clause);
  out << "PASS\n";
  return kExitPass;
}

struct GenArgs {
  std::string family;
  std::size_t n = 12;
  double p = 0.3;
  std::size_t rows = 4;
  std::size_t cols = 4;
  GenOptions opt;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    if (a.family == "gnp")
      inst = generate_gnp(a.n, a.p, a.opt);
    else if (a.family == "cubic")
      inst = generate_cubic(a.n, a.opt);
    else if (a.family == "grid")
      inst = generate_grid(a.rows, a.cols, a.opt);
    else
      inst = generate_union_of_cliques(a.opt.k, a.opt.ell);
  } catch (const std::exception& e) {
    err << "gen " << a.family << ": " << e.what() << '\n';
    return kExitInputError;
  }
  std::ostringstream text;
  text << "c " << a.family << " seed " << a.opt.seed << '\n' << serialize_instance(inst);
  write_to(a.out, text.str(), out);
  return 0;
}

struct OracleArgs {
  std::string instance;
  std::size_t cap = kOracleCap;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    inst = parse_instance_file(a.instance);
  } catch (const ParseError& e) {
    err << a.instance << ": " << e.what() << '\n';
    return kExitInputError;
  }
  const Graph g = inst.graph();
  const VertexSet s = inst.terminal_set();
  CycleSupports sup;
  try {
    sup = CycleSupports::by_subset_dp(g, a.cap);
  } catch (const std::invalid_argument& e) {
    err << a.instance << ": " << e.what() << '\n';
    return kExitInputError;
  }
  const auto packing = max_packing_supports(sup, s, inst.ell);
  const auto hitting = min_hitting_set(sup, s, inst.ell);
  out << "max_packing " << packing.size() << '\n';
  for (const auto& support : packing) {
    out << "  cycle ";
    print_vertices(out, cycle_on(g, support)->vertices());
  }
  out << "min_hitting_set " << hitting.size() << '\n' << "  vertices ";
  print_vertices(out, hitting.members());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing or hitting long S-cycles", "scycle"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Find k disjoint long S-cycles or a hitting set");
  solve_cmd->add_option("instance", solve_args.instance, "Instance file")->required();
  solve_cmd->add_option("--out", solve_args.out, "Write the report here instead of stdout");
  solve_cmd->add_flag("--trace", solve_args.trace, "Include the per-iteration trace");
  solve_cmd->add_flag("--text", solve_args.text, "Plain-text summary instead of JSON");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a report against its instance");
  verify_cmd->add_option("instance", verify_args.instance, "Instance file")->required();
  verify_cmd->add_option("report", verify_args.report, "JSON report from solve")->required();
  verify_cmd->add_option("--cap", verify_args.cap, "Exhaustive-check vertex cap")
      ->check(CLI::Range(std::size_t{0}, kOracleHardCap));

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded instance");
  gen_cmd->add_option("family", gen_args.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"gnp", "cubic", "grid", "union-of-cliques"}));
  gen_cmd->add_option("--n", gen_args.n, "Vertex count (gnp, cubic)");
  gen_cmd->add_option("--p", gen_args.p, "Edge probability (gnp)");
  gen_cmd->add_option("--rows", gen_args.rows, "Grid rows");
  gen_cmd->add_option("--cols", gen_args.cols, "Grid columns");
  gen_cmd->add_option("--k", gen_args.opt.k, "Number of cycles sought");
  gen_cmd->add_option("--ell", gen_args.opt.ell, "Minimum cycle length");
  gen_cmd->add_option("--terminals", gen_args.opt.terminals, "Terminal count (default: all vertices)");
  gen_cmd->add_option("--seed", gen_args.opt.seed, "PRNG seed");
  gen_cmd->add_option("--out", gen_args.out, "Write the instance here instead of stdout");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact packing and hitting numbers for small instances");
  oracle_cmd->add_option("instance", oracle_args.instance, "Instance file")->required();
  oracle_cmd->add_option("--cap", oracle_args.cap, "Vertex cap")->check(CLI::Range(std::size_t{0}, kOracleHardCap));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, out, err);
    if (*gen_cmd) return cmd_gen(gen_args, out, err);
    return cmd_oracle(oracle_args, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitInputError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace scycle
