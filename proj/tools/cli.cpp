#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/constructions.hpp"
#include "turan/containment.hpp"
#include "turan/formulas.hpp"
#include "turan/oracle.hpp"
#include "turan/verify.hpp"

namespace turan::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

/// File could not be read, written or parsed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Global {
  bool json = true;
  bool quiet = false;
};

struct Outcome {
  json inputs = json::object();
  json outputs = json::object();
  bool pass = true;
  /// Exit code when `pass` is false.
  int failure_code = kFailed;
  /// Lines printed instead of JSON when --no-json is given.
  std::vector<std::string> text;
};

FamilyKind spider_kind(const std::string& kind) {
  if (kind == "t3") return FamilyKind::T3;
  if (kind == "tpp") return FamilyKind::TDoublePrime;
  if (kind == "tppp") return FamilyKind::TTriplePrime;
  throw DomainError("family '" + kind + "' has no construction (expected t3, tpp or tppp)");
}

ExtremalValue evaluate(const std::string& kind, Count n, Count p, T3Coverage coverage) {
  if (kind == "path") return ex_path(p, n);
  if (kind == "star") return ex_star(p, n);
  return extremal_number(spider_kind(kind), p, n, coverage);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw IoError("cannot write '" + path + "'");
}

bool looks_like_edge_list(const std::string& path, const std::string& text) {
  const auto ext = std::filesystem::path(path).extension().string();
  if (ext == ".g6" || ext == ".graph6") return false;
  if (ext == ".edges" || ext == ".txt") return true;
  const auto end = text.find('\n');
  const std::string first = text.substr(0, end);
  return first.empty() || first.front() == '#' || first.find(' ') != std::string::npos;
}

SimpleGraph read_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (looks_like_edge_list(path, text)) return from_edge_list(text);
    std::string line = text.substr(0, text.find('\n'));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    return from_graph6(line);
  } catch (const DomainError& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  } catch (const std::runtime_error& e) {
    throw IoError("cannot parse '" + path + "': " + e.what());
  }
}

json witness_json(const EmbeddingWitness& w) { return json(w.image); }

// ---------------------------------------------------------------------------

struct FormulaArgs {
  std::string family;
  Count n = 0;
  Count p = 0;
  bool partial = false;
};

Outcome cmd_formula(const FormulaArgs& a) {
  Outcome o;
  o.inputs = {{"family", a.family}, {"n", a.n}, {"p", a.p}, {"partial", a.partial}};
  const ExtremalValue v =
      evaluate(a.family, a.n, a.p, a.partial ? T3Coverage::Partial : T3Coverage::Full);
  o.outputs = {{"value", v.value}, {"branch", v.branch}};
  if (a.family != "star" && a.p >= a.n - 1 && a.n >= 3) {
    const auto [k, r] = decompose(a.p, a.n);
    o.outputs["k"] = k;
    o.outputs["r"] = r;
  }
  o.text.push_back("value " + std::to_string(v.value) + " (" + v.branch + ")");
  return o;
}

struct ConstructArgs {
  std::string family;
  Count n = 0;
  Count p = 0;
  std::string out_path;
  bool connected = false;
  std::string format;
  bool check_free = false;
};

Outcome cmd_construct(const ConstructArgs& a) {
  Outcome o;
  o.inputs = {{"family", a.family}, {"n", a.n}, {"p", a.p}, {"path", a.out_path},
              {"connected", a.connected}, {"check_free", a.check_free}};
  const FamilyKind kind = spider_kind(a.family);
  const Construction c = extremal_graph(kind, a.p, a.n, a.connected);
  const Count formula = extremal_number(kind, a.p, a.n).value;
  const Count edges = c.graph.edge_count();

  std::string format = a.format;
  if (format.empty()) {
    const auto ext = std::filesystem::path(a.out_path).extension().string();
    format = ext == ".edges" || ext == ".txt" ? "edges" : "g6";
  }
  o.inputs["format"] = format;
  write_file(a.out_path, format == "edges" ? to_edge_list(c.graph) : to_graph6(c.graph) + "\n");

  o.outputs = {{"vertices", c.graph.order()},
               {"edges", edges},
               {"formula", formula},
               {"equals_formula", edges == formula},
               {"base", to_string(c.recipe.base)},
               {"prepended_cliques", c.recipe.prepended_cliques},
               {"base_order", c.recipe.base_order},
               {"connected_base", c.recipe.base != BaseKind::CliqueUnion &&
                                      c.recipe.base != BaseKind::NearRegular},
               {"degrees_match", c.graph.degree_sequence() == c.recipe.expected_degrees},
               {"file", a.out_path}};
  o.pass = edges == formula && c.graph.degree_sequence() == c.recipe.expected_degrees;
  if (a.check_free) {
    const bool free = !contains_tree(c.graph, make_family(a.family, static_cast<int>(a.n)));
    o.outputs["tree_free"] = free;
    o.pass = o.pass && free;
  }
  o.text.push_back(std::to_string(c.graph.order()) + " vertices, " + std::to_string(edges) +
                   " edges, formula " + std::to_string(formula) + ", base " +
                   to_string(c.recipe.base) + ", wrote " + a.out_path);
  return o;
}

struct CheckArgs {
  std::string graph_path;
  std::string family;
  std::string expect;
};

Outcome cmd_check(const CheckArgs& a) {
  Outcome o;
  o.inputs = {{"graph", a.graph_path}, {"family", a.family}};
  const TreeFamily f = parse_family_spec(a.family);
  const SimpleGraph g = read_graph(a.graph_path);
  const auto w = contains_tree(g, f);
  o.outputs = {{"vertices", g.order()}, {"edges", g.edge_count()}, {"contains", w.has_value()}};
  if (w) {
    o.outputs["witness"] = witness_json(*w);
    o.outputs["witness_valid"] = verify_witness(g, realize(f), *w);
    o.pass = o.outputs["witness_valid"].get<bool>();
  }
  if (!a.expect.empty()) {
    o.inputs["expect"] = a.expect;
    o.pass = o.pass && (a.expect == "contains") == w.has_value();
  }
  o.text.push_back(std::string("contains: ") + (w ? "yes" : "no"));
  return o;
}

struct OracleArgs {
  std::string family;
  int p = 0;
  int threads = 1;
  std::int64_t budget_nodes = 0;
  std::int64_t time_ms = 0;
};

OracleBudget budget_from(std::int64_t nodes, std::int64_t time_ms) {
  OracleBudget budget;
  if (const char* env = std::getenv("TURAN_BUDGET_NODES"); env != nullptr && *env != '\0') {
    try {
      budget.max_nodes = std::stoll(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("TURAN_BUDGET_NODES is not an integer: '") + env + "'");
    }
  }
  if (nodes > 0) budget.max_nodes = nodes;
  if (time_ms > 0) budget.max_time = std::chrono::milliseconds(time_ms);
  if (budget.max_nodes <= 0) throw DomainError("oracle node budget must be positive");
  return budget;
}

Outcome cmd_oracle(const OracleArgs& a) {
  Outcome o;
  const OracleBudget budget = budget_from(a.budget_nodes, a.time_ms);
  o.inputs = {{"family", a.family}, {"p", a.p}, {"threads", a.threads},
              {"budget_nodes", budget.max_nodes}, {"budget_ms", budget.max_time.count()}};
  const TreeFamily f = parse_family_spec(a.family);
  const OracleResult r = ex_bruteforce(a.p, f, budget, a.threads);
  o.outputs = {{"value", r.value},
               {"exact", r.exact},
               {"nodes_explored", r.nodes_explored},
               {"witness", to_graph6(r.witness)}};
  o.pass = r.exact;
  std::optional<Count> formula;
  if (f.kind() == FamilyKind::Path) {
    formula = a.p >= f.order() - 1 ? ex_path(a.p, f.order()).value : binomial2(a.p);
  } else if (f.kind() == FamilyKind::Star) {
    formula = a.p >= f.order() ? ex_star(a.p, f.parameter()).value : binomial2(a.p);
  }
  if (formula) {
    o.outputs["formula"] = *formula;
    o.outputs["matches_formula"] = *formula == r.value;
    o.pass = o.pass && *formula == r.value;
  }
  o.text.push_back("value " + std::to_string(r.value) + (r.exact ? " (exact)" : " (lower bound)"));
  return o;
}

struct VerifyArgs {
  std::string n_range = "15..20";
  std::string p_range;
  int threads = 1;
  bool oracle = false;
  bool no_constructions = false;
  bool values = false;
  std::int64_t budget_nodes = 0;
};

const char* family_key(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::T3: return "t3";
    case FamilyKind::TDoublePrime: return "tpp";
    case FamilyKind::TTriplePrime: return "tppp";
    case FamilyKind::Path: return "path";
    case FamilyKind::Star: return "star";
    default: return "explicit";
  }
}

json suite_json(const SuiteReport& report, bool with_values) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"check", f.check}, {"family", f.family}, {"n", f.n}, {"p", f.p},
                        {"detail", f.detail}});
  }
  json out = {{"checks", report.checks},
              {"connected_checks", report.connected_checks},
              {"value_count", report.values.size()},
              {"failures", failures}};
  if (with_values) {
    json values = json::array();
    for (const auto& v : report.values) {
      values.push_back({{"family", family_key(v.family)},
                        {"n", v.n},
                        {"p", v.p},
                        {"value", v.value},
                        {"branch", v.branch}});
    }
    out["values"] = std::move(values);
  }
  return out;
}

Outcome cmd_verify(const VerifyArgs& a) {
  Outcome o;
  SuiteReport report;
  if (a.oracle) {
    const auto [lo, hi] = parse_int_range(a.p_range.empty() ? "4..8" : a.p_range);
    if (lo < 1 || hi < lo || hi > 9) {
      throw DomainError("oracle verification requires 1 <= p_min <= p_max <= 9");
    }
    OracleSuiteOptions options;
    options.p_min = static_cast<int>(lo);
    options.p_max = static_cast<int>(hi);
    options.threads = a.threads;
    options.budget = budget_from(a.budget_nodes, 0);
    o.inputs = {{"oracle", true}, {"p", a.p_range.empty() ? "4..8" : a.p_range},
                {"threads", a.threads}, {"budget_nodes", options.budget.max_nodes}};
    report = run_oracle_suite(options);
  } else {
    SuiteOptions options;
    const auto [n_min, n_max] = parse_int_range(a.n_range);
    if (n_min < 10) throw DomainError("verify requires n >= 10 (got n = " + std::to_string(n_min) + ")");
    if (n_max < n_min) throw DomainError("empty n range '" + a.n_range + "'");
    options.n_min = n_min;
    options.n_max = n_max;
    options.p = parse_p_range(a.p_range.empty() ? "n..4n" : a.p_range);
    for (Count n = n_min; n <= n_max; ++n) {
      if (options.p.hi.at(n) < n) {
        throw DomainError("p range '" + a.p_range + "' lies below n = " + std::to_string(n));
      }
    }
    options.constructions = !a.no_constructions;
    options.threads = a.threads;
    o.inputs = {{"oracle", false}, {"n", a.n_range}, {"p", a.p_range.empty() ? "n..4n" : a.p_range},
                {"threads", a.threads}, {"constructions", options.constructions}};
    report = run_invariant_suite(options);
  }
  o.outputs = suite_json(report, a.values);
  o.pass = report.passed();
  o.text.push_back(std::to_string(report.checks) + " checks, " +
                   std::to_string(report.failures.size()) + " failures");
  for (const auto& f : report.failures) {
    o.text.push_back("FAIL " + f.check + " " + f.family + " p=" + std::to_string(f.p) + " " +
                     f.detail);
  }
  return o;
}

struct TableArgs {
  std::string family;
  Count n = 0;
  Count p_min = 0;
  Count p_max = 0;
  bool csv = false;
  bool partial = false;
};

Outcome cmd_table(const TableArgs& a, std::ostream& out) {
  Outcome o;
  o.inputs = {{"family", a.family}, {"n", a.n}, {"p_min", a.p_min}, {"p_max", a.p_max}};
  if (a.p_max < a.p_min) throw DomainError("table requires p_min <= p_max");
  json rows = json::array();
  std::ostringstream csv;
  csv << "p,k,r,value,branch\n";
  for (Count p = a.p_min; p <= a.p_max; ++p) {
    const ExtremalValue v =
        evaluate(a.family, a.n, p, a.partial ? T3Coverage::Partial : T3Coverage::Full);
    Count k = 0;
    Count r = p;
    if (a.family != "star" && p >= a.n - 1) {
      const ResidueDecomposition d = decompose(p, a.n);
      k = d.k;
      r = d.r;
    }
    rows.push_back({{"p", p}, {"k", k}, {"r", r}, {"value", v.value}, {"branch", v.branch}});
    csv << p << ',' << k << ',' << r << ',' << v.value << ',' << v.branch << '\n';
  }
  o.outputs = {{"rows", rows}};
  if (a.csv) out << csv.str();
  o.text.push_back(csv.str());
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact extremal numbers for spider trees of maximum degree n-4"};
  app.name("turan");
  app.require_subcommand(1);
  Global global;
  app.add_flag("--json,!--no-json", global.json, "Emit a JSON report (default on)");
  app.add_flag("-q,--quiet", global.quiet, "Suppress log lines on stderr");

  const auto positive = CLI::PositiveNumber;

  FormulaArgs formula;
  auto* f_cmd = app.add_subcommand("formula", "Closed-form extremal number");
  f_cmd->add_option("family", formula.family, "t3, tpp, tppp, path or star")->required();
  f_cmd->add_option("n", formula.n, "Tree order (star: number of leaves)")->required();
  f_cmd->add_option("p", formula.p, "Host order")->required();
  f_cmd->add_flag("--partial", formula.partial, "Allow T3 residues valid from n = 10");

  ConstructArgs construct;
  auto* c_cmd = app.add_subcommand("construct", "Build an extremal graph and write it out");
  c_cmd->add_option("family", construct.family, "t3, tpp or tppp")->required();
  c_cmd->add_option("n", construct.n)->required();
  c_cmd->add_option("p", construct.p)->required();
  c_cmd->add_option("out", construct.out_path, "Output file")->required();
  c_cmd->add_flag("--connected", construct.connected, "Prefer a connected base where it ties");
  c_cmd->add_option("--format", construct.format, "g6 or edges (default by extension)")
      ->check(CLI::IsMember({"g6", "edges"}));
  c_cmd->add_flag("--check-free", construct.check_free, "Also verify the graph is tree-free");

  CheckArgs check;
  auto* k_cmd = app.add_subcommand("check", "Test a graph file for a tree subgraph");
  k_cmd->add_option("graph", check.graph_path, "graph6 or edge-list file")->required();
  k_cmd->add_option("family", check.family, "Family spec, e.g. t3:15 or file:tree.edges")
      ->required();
  k_cmd->add_option("--expect", check.expect, "Fail unless the answer matches")
      ->check(CLI::IsMember({"contains", "free"}));

  OracleArgs oracle;
  auto* o_cmd = app.add_subcommand("oracle", "Brute-force extremal number for small p");
  o_cmd->add_option("family", oracle.family, "Family spec, e.g. path:5 or star:3")->required();
  o_cmd->add_option("p", oracle.p)->required()->check(positive);
  o_cmd->add_option("--threads", oracle.threads)->check(positive);
  o_cmd->add_option("--budget-nodes", oracle.budget_nodes, "Node budget")->check(positive);
  o_cmd->add_option("--time-ms", oracle.time_ms, "Time budget")->check(positive);

  VerifyArgs verify;
  auto* v_cmd = app.add_subcommand("verify", "Run the invariant or oracle suite");
  v_cmd->add_option("--n", verify.n_range, "n range, e.g. 15..20");
  v_cmd->add_option("--p", verify.p_range, "p range in terms of n, e.g. n..4n or 2n-9");
  v_cmd->add_option("--threads", verify.threads)->check(positive);
  v_cmd->add_flag("--oracle", verify.oracle, "Cross-check the oracle on paths and stars");
  v_cmd->add_flag("--no-constructions", verify.no_constructions, "Skip construction checks");
  v_cmd->add_flag("--values", verify.values, "Include every computed value in the report");
  v_cmd->add_option("--budget-nodes", verify.budget_nodes)->check(positive);

  TableArgs table;
  auto* t_cmd = app.add_subcommand("table", "Tabulate extremal numbers over a p range");
  t_cmd->add_option("family", table.family)->required();
  t_cmd->add_option("n", table.n)->required();
  t_cmd->add_option("p_min", table.p_min)->required();
  t_cmd->add_option("p_max", table.p_max)->required();
  t_cmd->add_flag("--csv", table.csv, "Print CSV instead of JSON");
  t_cmd->add_flag("--partial", table.partial, "Allow T3 residues valid from n = 10");

  std::vector<const char*> argv{"turan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "turan: " << e.what() << "\n";
    return kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = Clock::now();
  Outcome outcome;
  int code = kPass;
  std::string error;
  try {
    if (command == "formula") outcome = cmd_formula(formula);
    if (command == "construct") outcome = cmd_construct(construct);
    if (command == "check") outcome = cmd_check(check);
    if (command == "oracle") outcome = cmd_oracle(oracle);
    if (command == "verify") outcome = cmd_verify(verify);
    if (command == "table") outcome = cmd_table(table, out);
    if (!outcome.pass) code = outcome.failure_code;
  } catch (const DomainError& e) {
    error = e.what();
    code = kUsage;
  } catch (const IoError& e) {
    error = e.what();
    code = kIo;
  } catch (const std::runtime_error& e) {
    error = e.what();
    code = kIo;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();

  if (!error.empty()) {
    outcome.pass = false;
    err << "turan " << command << ": " << error << "\n";
  } else if (!global.quiet) {
    err << "turan " << command << ": " << (outcome.pass ? "pass" : "FAIL") << " in " << elapsed
        << " ms\n";
  }

  const bool csv_only = command == "table" && table.csv;
  if (global.json && !csv_only) {
    json report = {{"command", command},
                   {"argv", args},
                   {"inputs", outcome.inputs},
                   {"outputs", outcome.outputs},
                   {"pass", outcome.pass},
                   {"exit_code", code},
                   {"timings", {{"total_ms", elapsed}}}};
    if (!error.empty()) report["error"] = error;
    out << report.dump(2) << "\n";
  } else if (!csv_only) {
    for (const auto& line : outcome.text) out << line << "\n";
  }
  return code;
}

}  // namespace turan::cli
