#include "decomp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "decomp/decomposition.hpp"
#include "decomp/discharging.hpp"
#include "decomp/generate.hpp"
#include "decomp/report_json.hpp"
#include "decomp/rotation_graph.hpp"
#include "decomp/structure.hpp"

namespace decomp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + out_path + "'");
  f << text;
}

int oracle_budget_from_env() {
  const char* s = std::getenv("DECOMP_ORACLE_EDGE_BUDGET");
  if (!s || !*s) return OracleOptions{}.edge_budget;
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != std::string(s).size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("invalid DECOMP_ORACLE_EDGE_BUDGET value '" + std::string(s) + "'");
  }
}

int cmd_analyze(const std::string& path, bool json, std::ostream& out) {
  const std::string bytes = slurp(path);
  const RotationGraph g = parse_rotation_graph(bytes);
  const StructureReport rep = classify(g);
  if (json) {
    out << make_report("analyze", bytes, to_json(rep)).dump(2) << '\n';
    return 0;
  }
  const auto& s = rep.summary;
  out << "vertices " << s.vertices << ", edges " << s.edges << ", faces " << s.faces
      << ", characteristic " << s.characteristic << '\n';
  out << "class_g:";
  for (const auto& c : rep.class_g) out << ' ' << c;
  if (rep.class_g.empty()) out << " (none)";
  out << "\nclass_h:";
  for (auto [i, j] : rep.class_h) out << " no-" << i << "-" << j << "-cycles";
  if (rep.class_h.empty()) out << " (none)";
  out << "\ncycles present:";
  for (const auto& [k, present] : rep.has_cycle)
    if (present) out << ' ' << k;
  out << "\nchorded cycles:";
  bool any_chord = false;
  for (const auto& [k, present] : rep.chorded_cycle)
    if (present) {
      out << ' ' << k;
      any_chord = true;
    }
  if (!any_chord) out << " (none)";
  out << "\nadjacent 4-cycles: " << (rep.adjacent_4cycles ? "yes" : "no") << '\n';
  for (int v = 0; v < static_cast<int>(rep.vertices.size()); ++v) {
    const auto& p = rep.vertices[v];
    out << "  " << v << ": degree " << p.degree << ", corners";
    for (const auto& [deg, cnt] : p.corner_counts)
      out << ' ' << cnt << "x" << deg << "-face";
    out << '\n';
  }
  return 0;
}

int cmd_gen(const std::string& kind, const std::vector<int>& params,
            const std::string& out_path, std::ostream& out) {
  const RotationGraph g = generate(kind, params);
  emit(serialize_rotation_graph(g), out_path, out);
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& dec_path, bool json,
               std::ostream& out) {
  const std::string gbytes = slurp(graph_path);
  const std::string dbytes = slurp(dec_path);
  const RotationGraph g = parse_rotation_graph(gbytes);
  const OrientedDecomposition dec = parse_decomposition(dbytes);
  const auto violation = verify(g, dec);
  if (json) {
    Json payload;
    payload["ok"] = !violation.has_value();
    payload["d"] = dec.d;
    payload["h"] = dec.h;
    if (violation) payload["violation"] = to_json(*violation);
    out << make_report("verify", gbytes + dbytes, std::move(payload)).dump(2) << '\n';
  } else if (violation) {
    out << "violated: " << violation->describe() << '\n';
  } else {
    out << "ok: valid (" << dec.d << "," << dec.h << ")-decomposition\n";
  }
  return violation ? 1 : 0;
}

int cmd_discharge(const std::string& path, const std::string& ruleset, bool json,
                  std::ostream& out) {
  const std::string bytes = slurp(path);
  const RotationGraph g = parse_rotation_graph(bytes);
  const auto rs = ruleset_from_string(ruleset);
  if (!rs) throw UsageError("unknown ruleset '" + ruleset + "'");
  const AuditReport rep = audit(g, *rs);
  if (json) {
    out << make_report("discharge", bytes, to_json(rep)).dump(2) << '\n';
  } else {
    out << "ruleset " << to_string(*rs) << ", characteristic "
        << rep.summary.characteristic << '\n';
    out << "total charge " << to_string(rep.total_initial) << " -> "
        << to_string(rep.total_final)
        << (rep.conservation_ok ? " (conserved)" : " (NOT conserved)") << '\n';
    out << "in class: " << (rep.in_class ? "yes" : "no") << '\n';
    out << "all nonnegative: " << (rep.property1 ? "yes" : "no")
        << ", some positive: " << (rep.property2 ? "yes" : "no") << '\n';
    for (const auto& n : rep.negatives) {
      out << "  " << to_string(n.element) << " final " << to_string(n.final);
      if (n.explained_by)
        out << ", explained by " << n.explained_by->lemma;
      else
        out << ", unexplained";
      out << '\n';
    }
    if (rep.endgame)
      out << "all charges zero; configuration " << rep.endgame->lemma
          << " present for the endgame\n";
  }
  return rep.conservation_ok ? 0 : 1;
}

struct DecomposeArgs {
  std::string path, method = "oracle", out_path;
  int d = -1, h = -1;
  bool trace = false;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  const std::string bytes = slurp(a.path);
  const RotationGraph g = parse_rotation_graph(bytes);
  const int budget = oracle_budget_from_env();
  if (a.trace && a.out_path.empty())
    throw UsageError("--trace writes JSON to stdout; use --out for the decomposition");

  OrientedDecomposition dec;
  DecomposeResult res;
  if (a.method == "oracle") {
    if (a.d < 0 || a.h < 0) throw UsageError("--method oracle requires --d and --h");
    auto found = oracle_decide(g, a.d, a.h, {budget});
    if (!found) {
      err << "no (" << a.d << "," << a.h << ")-decomposition exists\n";
      return 1;
    }
    dec = std::move(*found);
  } else if (a.method == "reduce:T0" || a.method == "reduce:T1") {
    const Theorem t = a.method == "reduce:T0" ? Theorem::T0 : Theorem::T1;
    const auto [want_d, want_h] = params_for(t);
    if ((a.d >= 0 && a.d != want_d) || (a.h >= 0 && a.h != want_h))
      throw UsageError(a.method + " produces (" + std::to_string(want_d) + "," +
                       std::to_string(want_h) + ")-decompositions");
    DecomposeOptions opts;
    opts.oracle_edge_budget = budget;
    res = decompose_by_reduction(g, t, opts);
    for (const auto& w : res.warnings) err << "warning: " << w << '\n';
    if (a.trace) out << make_report("decompose", bytes, trace_json(res)).dump(2) << '\n';
    if (res.status == DecomposeStatus::Nonexistent) {
      err << res.diagnostic << '\n';
      return 1;
    }
    if (res.status == DecomposeStatus::Irreducible) {
      err << "diagnostic: " << res.diagnostic << '\n';
      return 3;
    }
    dec = *res.decomposition;
  } else {
    throw UsageError("unknown method '" + a.method + "'");
  }

  if (auto bad = verify(g, dec)) {
    err << "internal error: produced decomposition fails verification: "
        << bad->describe() << '\n';
    return 1;
  }
  emit(serialize_decomposition(dec), a.out_path, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"(d,h)-decompositions of embedded graphs: construction, "
               "verification, and discharging audits"};
  app.require_subcommand(1);

  std::string a_path;
  bool a_json = false;
  auto* analyze = app.add_subcommand("analyze", "classify a graph and its embedding");
  analyze->add_option("path", a_path, "ROTSYS input file")->required();
  analyze->add_flag("--json", a_json, "emit a JSON report");

  DecomposeArgs d_args;
  auto* decompose = app.add_subcommand("decompose", "construct a (d,h)-decomposition");
  decompose->set_help_flag("--help", "print help");  // frees -h for the degree bound
  decompose->add_option("path", d_args.path, "ROTSYS input file")->required();
  decompose->add_option("--d", d_args.d, "out-degree bound");
  decompose->add_option("--h", d_args.h, "subgraph degree bound");
  decompose->add_option("--method", d_args.method, "oracle | reduce:T0 | reduce:T1");
  decompose->add_flag("--trace", d_args.trace, "print the reduction trace as JSON");
  decompose->add_option("--out", d_args.out_path, "write the decomposition here");

  std::string v_graph, v_dec;
  bool v_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition file");
  verify_cmd->add_option("graph", v_graph, "ROTSYS input file")->required();
  verify_cmd->add_option("decomposition", v_dec, "DECOMP input file")->required();
  verify_cmd->add_flag("--json", v_json, "emit a JSON report");

  std::string di_path, di_ruleset;
  bool di_json = false;
  auto* discharge = app.add_subcommand("discharge", "run a discharging audit");
  discharge->add_option("path", di_path, "ROTSYS input file")->required();
  discharge->add_option("--ruleset", di_ruleset, "T0_13 | T0_2 | T1_1 | T1_2 | T1_3")
      ->required();
  discharge->add_flag("--json", di_json, "emit a JSON report");

  std::string g_kind, g_out;
  std::vector<int> g_params;
  auto* gen = app.add_subcommand("gen", "generate a test instance");
  gen->add_option("kind", g_kind,
                  "cycle | path | wheel | prism | planar_grid | toroidal_grid | "
                  "hex_grid | complete")
      ->required();
  gen->add_option("params", g_params, "integer parameters");
  gen->add_option("--out", g_out, "write the ROTSYS file here");

  std::vector<const char*> argv;
  argv.push_back("decomp");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*analyze) return cmd_analyze(a_path, a_json, out);
    if (*decompose) return cmd_decompose(d_args, out, err);
    if (*verify_cmd) return cmd_verify(v_graph, v_dec, v_json, out);
    if (*discharge) return cmd_discharge(di_path, di_ruleset, di_json, out);
    if (*gen) return cmd_gen(g_kind, g_params, g_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace decomp
