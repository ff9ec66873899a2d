#include "domset/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "domset/bounds.hpp"
#include "domset/coefficients.hpp"
#include "domset/generators.hpp"
#include "domset/graph.hpp"
#include "domset/greedy.hpp"
#include "domset/oracle.hpp"

namespace domset::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitClaimFailure = 2;

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string conditions_line(const ConditionReport& report) {
  std::string out = "conditions:";
  for (int index = 1; index <= 6; ++index) {
    out += ' ';
    out += condition_name(index);
    out += report.condition(index) ? "=pass" : "=FAIL";
  }
  return out;
}

int run_coeffs(int delta, const std::string& format, std::ostream& out) {
  const CoefficientSet coeffs = solve_coefficients(delta);
  const ConditionReport report = verify_conditions(coeffs);
  const Rational bound = coeffs.bound();
  const bool no_improvement = delta < 5;

  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["d"] = coeffs.d;
    doc["a"] = coeffs.a.str();
    doc["s"] = coeffs.s.str();
    auto values = nlohmann::ordered_json::array();
    for (const Rational& value : coeffs.b) values.push_back(value.str());
    doc["b"] = std::move(values);
    doc["bound"] = bound.str();
    doc["bound_decimal"] = bound.decimal(6);
    nlohmann::ordered_json conditions;
    for (int index = 1; index <= 6; ++index) {
      conditions[condition_name(index)] = report.condition(index);
    }
    doc["conditions"] = std::move(conditions);
    if (no_improvement) doc["note"] = "no improvement claimed for d<5";
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "d,bound,bound_decimal,a,s";
    for (int j = 1; j <= coeffs.d; ++j) out << ",b_" << j;
    out << '\n' << coeffs.d << ',' << bound.str() << ',' << bound.decimal(6) << ','
        << coeffs.a.str() << ',' << coeffs.s.str();
    for (const Rational& value : coeffs.b) out << ',' << value.str();
    out << '\n';
  } else {
    out << "d=" << coeffs.d << '\n';
    out << "bound=" << bound.str() << " (" << bound.decimal(6) << ")\n";
    out << "a=" << coeffs.a.str() << '\n';
    out << "s=" << coeffs.s.str() << '\n';
    for (int j = 1; j <= coeffs.d; ++j) {
      out << "b_" << j << '=' << coeffs.b_at(j).str() << '\n';
    }
    out << conditions_line(report) << '\n';
    out << "slack_ii=" << report.slack_ii.str() << '\n';
    if (no_improvement) out << "note=no improvement claimed for d<5\n";
  }
  return report.all_passed() ? kExitOk : kExitClaimFailure;
}

int run_bounds(int d_min, int d_max, const std::string& format, const std::string& variant_name,
               std::ostream& out) {
  const ArnautovVariant variant =
      variant_name == "printed" ? ArnautovVariant::AsPrinted : ArnautovVariant::AsTabulated;
  const std::vector<BoundsRow> rows = comparison_table(d_min, d_max, variant);
  if (format == "csv") {
    out << comparison_table_csv(rows);
  } else {
    out << format_comparison_table(rows, variant);
  }
  return kExitOk;
}

int run_verify(int d_min, int d_max, std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  for (int d = d_min; d <= d_max; ++d) {
    const ConditionReport report = verify_conditions(solve_coefficients(d));
    if (!report.all_passed()) {
      all_ok = false;
      std::string failed;
      for (int index = 1; index <= 6; ++index) {
        if (!report.condition(index)) {
          if (!failed.empty()) failed += ',';
          failed += condition_name(index);
        }
      }
      out << "condition failure: d=" << d << " failing=(" << failed << ")\n";
    }
  }
  if (all_ok) {
    out << "all conditions hold for d=" << d_min << ".." << d_max << '\n';
    if (d_min < 5) {
      err << "note: d=3 and d=4 satisfy the conditions but claim no improvement\n";
    }
    return kExitOk;
  }
  return kExitClaimFailure;
}

int run_dominate(const std::string& path, int delta, const std::string& strategy_name,
                 bool audit, bool quiet, bool force, std::ostream& out, std::ostream& err) {
  const Graph g = parse_edge_list_file(path);
  if (g.vertex_count() == 0) {
    err << "error: graph is empty\n";
    return kExitUsage;
  }
  const Strategy strategy =
      strategy_name == "gain" ? Strategy::MaxGain : Strategy::PhasePreference;
  const CoefficientSet coeffs = solve_coefficients(delta);
  const bool applicable = g.min_degree() >= delta;

  RunResult result = run_greedy(g, coeffs, strategy, audit, force);

  if (!quiet) {
    out << "graph: n=" << g.vertex_count() << " m=" << g.edge_count()
        << " min_degree=" << g.min_degree() << '\n';
    out << "coefficients: d=" << delta << " bound=" << coeffs.bound().str() << " ("
        << coeffs.bound().decimal(6) << ")\n";
    if (applicable) {
      out << "cap=" << step_cap(coeffs, g.vertex_count()).get_str() << '\n';
    } else {
      out << "cap=none (min degree below d, bound not applicable)\n";
    }
    if (audit) {
      for (const StepRecord& record : result.log) out << format_step(record) << '\n';
    }
  }
  out << "selected=" << result.dominating_set.size() << '\n';
  out << "dominating_set=" << join_ids(result.dominating_set) << '\n';
  if (!quiet) {
    out << "steps=" << result.log.size() << '\n';
    out << "final_potential=" << result.final_potential.str() << '\n';
    out << "phases_nondecreasing=" << (result.phases_nondecreasing ? "yes" : "no") << '\n';
    out << "audit=" << (result.audited ? "passed" : "skipped") << '\n';
  }
  return kExitOk;
}

int run_gamma(const std::string& path, int limit, std::ostream& out) {
  const Graph g = parse_edge_list_file(path);
  const OracleResult result = exact_domination_number(g, limit);
  out << "gamma=" << result.gamma << '\n';
  out << "witness=" << join_ids(result.witness) << '\n';
  out << "nodes_explored=" << result.nodes_explored << '\n';
  return kExitOk;
}

struct GenOptions {
  std::string kind;
  int n = 0;
  int p = 0;
  int q = 0;
  std::vector<int> offsets;
  int degree = 0;
  int extra = 0;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  Graph g;
  if (options.kind == "complete") {
    g = complete_graph(options.n);
  } else if (options.kind == "cycle") {
    g = cycle_graph(options.n);
  } else if (options.kind == "complete_bipartite") {
    g = complete_bipartite(options.p, options.q);
  } else if (options.kind == "circulant") {
    g = circulant_graph(options.n, options.offsets);
  } else if (options.kind == "random_regular") {
    g = random_regular_graph(options.n, options.degree, options.seed);
  } else if (options.kind == "random_min_degree") {
    g = random_min_degree_graph(options.n, options.degree, options.extra, options.seed);
  } else {
    err << "error: unknown kind '" << options.kind << "'\n";
    return kExitUsage;
  }
  if (!options.out_path.empty()) {
    std::ofstream file(options.out_path);
    if (!file) {
      err << "error: cannot open output file " << options.out_path << '\n';
      return kExitUsage;
    }
    write_edge_list(g, file);
  } else {
    write_edge_list(g, out);
  }
  return kExitOk;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"domination bound toolkit"};
  app.name("domset");
  app.require_subcommand(1);

  // coeffs
  auto* coeffs_cmd = app.add_subcommand("coeffs", "solve the bound coefficient system for one d");
  int coeffs_delta = 0;
  std::string coeffs_format = "table";
  coeffs_cmd->add_option("--delta", coeffs_delta, "minimum degree d (>= 3)")->required();
  coeffs_cmd->add_option("--format", coeffs_format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "tabulate prior bounds against the new one");
  int bounds_min = 0;
  int bounds_max = 0;
  std::string bounds_format = "table";
  std::string bounds_variant = "tabulated";
  bounds_cmd->add_option("--min", bounds_min, "smallest delta (>= 5)")->required();
  bounds_cmd->add_option("--max", bounds_max, "largest delta")->required();
  bounds_cmd->add_option("--format", bounds_format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  bounds_cmd->add_option("--variant", bounds_variant, "harmonic-sum variant for the first column")
      ->check(CLI::IsMember({"tabulated", "printed"}));

  // dominate
  auto* dominate_cmd = app.add_subcommand("dominate", "run the potential-function greedy");
  std::string dominate_path;
  int dominate_delta = 0;
  std::string dominate_strategy = "phase";
  bool dominate_audit = false;
  bool dominate_quiet = false;
  bool dominate_force = false;
  dominate_cmd->add_option("--graph", dominate_path, "edge-list file")->required();
  dominate_cmd->add_option("--delta", dominate_delta, "minimum degree d (>= 3)")->required();
  dominate_cmd->add_option("--strategy", dominate_strategy, "phase or gain")
      ->check(CLI::IsMember({"phase", "gain"}));
  auto* audit_flag = dominate_cmd->add_flag("--audit", dominate_audit, "emit one line per step");
  dominate_cmd->add_flag("--quiet", dominate_quiet, "print only the resulting set")
      ->excludes(audit_flag);
  dominate_cmd->add_flag("--force", dominate_force, "run even when min degree < d");

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "exact domination number (small graphs)");
  std::string gamma_path;
  int gamma_limit = 24;
  gamma_cmd->add_option("--graph", gamma_path, "edge-list file")->required();
  gamma_cmd->add_option("--limit", gamma_limit, "largest vertex count accepted");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate a test graph");
  GenOptions gen_options;
  gen_cmd->add_option("--kind", gen_options.kind,
                      "complete, cycle, complete_bipartite, circulant, random_regular, "
                      "random_min_degree")
      ->required();
  gen_cmd->add_option("--n", gen_options.n, "vertex count");
  gen_cmd->add_option("--p", gen_options.p, "first side size (complete_bipartite)");
  gen_cmd->add_option("--q", gen_options.q, "second side size (complete_bipartite)");
  gen_cmd->add_option("--offsets", gen_options.offsets, "circulant offsets")->delimiter(',');
  gen_cmd->add_option("--degree", gen_options.degree, "target degree");
  gen_cmd->add_option("--extra", gen_options.extra, "extra random edges (random_min_degree)");
  gen_cmd->add_option("--seed", gen_options.seed, "rng seed (DOMSET_SEED overrides)");
  gen_cmd->add_option("--out", gen_options.out_path, "write to file instead of stdout");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the six conditions over a range of d");
  int verify_min = 0;
  int verify_max = 0;
  verify_cmd->add_option("--min", verify_min, "smallest d (>= 3)")->required();
  verify_cmd->add_option("--max", verify_max, "largest d")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << "error: " << error.what() << '\n';
    return kExitUsage;
  }

  try {
    if (coeffs_cmd->parsed()) {
      if (coeffs_delta < 3) {
        err << "error: --delta must be >= 3\n";
        return kExitUsage;
      }
      return run_coeffs(coeffs_delta, coeffs_format, out);
    }
    if (bounds_cmd->parsed()) {
      if (bounds_min < 5 || bounds_max < bounds_min) {
        err << "error: requires 5 <= min <= max\n";
        return kExitUsage;
      }
      return run_bounds(bounds_min, bounds_max, bounds_format, bounds_variant, out);
    }
    if (dominate_cmd->parsed()) {
      if (dominate_delta < 3) {
        err << "error: --delta must be >= 3\n";
        return kExitUsage;
      }
      return run_dominate(dominate_path, dominate_delta, dominate_strategy, dominate_audit,
                          dominate_quiet, dominate_force, out, err);
    }
    if (gamma_cmd->parsed()) {
      return run_gamma(gamma_path, gamma_limit, out);
    }
    if (gen_cmd->parsed()) {
      if (const char* env_seed = std::getenv("DOMSET_SEED")) {
        gen_options.seed = std::stoull(env_seed);
      }
      return run_gen(gen_options, out, err);
    }
    if (verify_cmd->parsed()) {
      if (verify_min < 3 || verify_max < verify_min) {
        err << "error: requires 3 <= min <= max\n";
        return kExitUsage;
      }
      return run_verify(verify_min, verify_max, out, err);
    }
  } catch (const AuditError& failure) {
    err << "audit failure: " << failure.what() << '\n';
    err << format_step(failure.step()) << '\n';
    return kExitClaimFailure;
  } catch (const std::exception& failure) {
    err << "error: " << failure.what() << '\n';
    return kExitUsage;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace domset::cli
