// Command line front end: loads a dual graph from JSON and runs the
// stratification, cell enumeration, stability checks and phi computation
// on it. Exit codes: 0 success, 2 invalid input, 3 size cap exceeded,
// 4 internal cross-check failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jacstrat/examples_suite.hpp"
#include "jacstrat/graph_io.hpp"
#include "jacstrat/reports.hpp"

namespace {

using jacstrat::CurveGraph;
using nlohmann::json;

struct CommonArgs {
  std::string input;
  std::string format = "table";
  int jobs = 0;
  int max_edges = -1;  // -1 keeps each command's own default
  bool full = false;
};

void emit(const json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << '\n';
  else
    std::cout << jacstrat::reports::render_table(report);
}

CurveGraph load(const CommonArgs& args) {
  if (args.input.empty()) throw jacstrat::ValidationError("--input is required");
  return jacstrat::load_graph_file(args.input);
}

jacstrat::GeneratingSubgraph subgraph_of(const CurveGraph& g, const std::vector<int>& edge_ids,
                                         bool edges_given) {
  if (!edges_given) return jacstrat::GeneratingSubgraph::full(g);
  return jacstrat::GeneratingSubgraph::of_edges(g, edge_ids);
}

int run_examples(const CommonArgs& args, const std::string& inject) {
  const jacstrat::ExamplesReport report = jacstrat::run_examples_suite(inject, args.jobs);
  if (args.format == "json") {
    json rows = json::array();
    for (const auto& row : report.rows) {
      rows.push_back({{"name", row.name},
                      {"strata_ok", row.strata_ok},
                      {"cells_ok", row.cells_ok},
                      {"compare_ok", row.compare_ok},
                      {"detail", row.detail}});
    }
    const json doc = {{"schema_version", jacstrat::reports::kSchemaVersion},
                      {"command", "examples"},
                      {"rows", std::move(rows)},
                      {"all_pass", report.all_pass}};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& row : report.rows) {
      std::cout << (row.pass() ? "pass" : "FAIL") << "  " << row.name;
      if (!row.detail.empty()) std::cout << "  (" << row.detail << ")";
      std::cout << '\n';
    }
    std::cout << (report.all_pass ? "all examples passed" : "example failures") << '\n';
  }
  return report.all_pass ? 0 : 4;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"combinatorics of compactified Jacobians of nodal curves"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonArgs args;
  app.add_option("--input,-i", args.input, "graph JSON file");
  app.add_option("--format,-f", args.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--jobs,-j", args.jobs, "worker threads (0 = default)");
  app.add_option("--max-edges", args.max_edges, "raise the per-command edge cap");
  app.add_flag("--full", args.full, "include the full item lists in reports");

  app.add_subcommand("info", "graph invariants and the dualizing multidegree");

  auto* check = app.add_subcommand("check", "classify a multidegree for semistability");
  std::vector<long long> opt_e, opt_d;
  std::vector<int> check_edges_arg;
  auto* check_e = check->add_option("-e", opt_e, "normalized multidegree")->delimiter(',');
  auto* check_d = check->add_option("-d", opt_d, "plain multidegree")->delimiter(',');
  auto* check_edges_opt =
      check->add_option("--edges", check_edges_arg, "kept edge ids (default: all)")
          ->delimiter(',');
  check_e->excludes(check_d);

  app.add_subcommand("strata", "enumerate the strata of the compactified Jacobian");
  app.add_subcommand("cells", "enumerate Delaunay cells of the cycle lattice");
  app.add_subcommand("compare", "stratum counts against cell counts per codimension");

  auto* stability = app.add_subcommand("stability", "slope stability of a sheaf model");
  std::vector<long long> opt_dprime, opt_lambda;
  std::vector<int> stab_edges_arg;
  stability->add_option("--dprime", opt_dprime, "multidegree on the kept subgraph")
      ->delimiter(',')
      ->required();
  stability->add_option("--lambda", opt_lambda, "positive vertex weights (default: all 1)")
      ->delimiter(',');
  auto* stab_edges_opt =
      stability->add_option("--edges", stab_edges_arg, "kept edge ids (default: all)")
          ->delimiter(',');

  auto* phi = app.add_subcommand("phi", "translation parameter of a polarization");
  std::vector<long long> opt_omega, opt_dsplit, opt_twist, phi_lambda;
  long long opt_degree = 0;
  phi->add_option("--lambda", phi_lambda, "positive vertex weights (default: all 1)")
      ->delimiter(',');
  auto* omega_opt =
      phi->add_option("--omega", opt_omega, "omega multidegree (default: dualizing)")
          ->delimiter(',');
  auto* degree_opt = phi->add_option("--degree", opt_degree, "total degree (default: g-1)");
  auto* dsplit_opt =
      phi->add_option("--dsplit", opt_dsplit, "degree split (default: proportional)")
          ->delimiter(',');
  auto* twist_opt = phi->add_option("--twist", opt_twist, "integer twist (default: 0)")
          ->delimiter(',');

  auto* examples = app.add_subcommand("examples", "run the built-in example suite");
  std::string inject;
  examples->add_option("--inject-failure", inject, "perturb the named row's expected table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return 2;
  }

  using namespace jacstrat;

  if (app.got_subcommand("examples")) return run_examples(args, inject);

  if (app.got_subcommand("info")) {
    emit(reports::info_report(load(args)), args.format);
    return 0;
  }

  if (app.got_subcommand("check")) {
    const CurveGraph g = load(args);
    const auto sub = subgraph_of(g, check_edges_arg, check_edges_opt->count() > 0);
    NormalizedMultidegree e;
    if (check_e->count() > 0) {
      e.values = opt_e;
    } else if (check_d->count() > 0) {
      e = normalize(Multidegree{opt_d}, g);
    } else {
      throw ValidationError("check needs -e or -d");
    }
    emit(reports::check_report(g, sub, e), args.format);
    return 0;
  }

  if (app.got_subcommand("strata")) {
    const CurveGraph g = load(args);
    StrataOptions opt;
    opt.jobs = args.jobs;
    if (args.max_edges >= 0) opt.max_edges = args.max_edges;
    emit(reports::strata_report(g, enumerate_strata(g, opt), args.full), args.format);
    return 0;
  }

  if (app.got_subcommand("cells")) {
    const CurveGraph g = load(args);
    const CycleLattice lattice = build_lattice(g);
    CellOptions opt;
    opt.jobs = args.jobs;
    if (args.max_edges >= 0) opt.max_edges = args.max_edges;
    emit(reports::cells_report(lattice, enumerate_cells(lattice, opt), args.full), args.format);
    return 0;
  }

  if (app.got_subcommand("compare")) {
    const CurveGraph g = load(args);
    StrataOptions sdef;
    CellOptions cdef;
    const int strata_cap = args.max_edges >= 0 ? args.max_edges : sdef.max_edges;
    const int cells_cap = args.max_edges >= 0 ? args.max_edges : cdef.max_edges;
    emit(reports::compare_report(g, compare_with_strata(g, strata_cap, cells_cap, args.jobs)),
         args.format);
    return 0;
  }

  if (app.got_subcommand("stability")) {
    const CurveGraph g = load(args);
    const auto sub = subgraph_of(g, stab_edges_arg, stab_edges_opt->count() > 0);
    SheafModel f;
    f.subgraph = sub.kept;
    f.dprime = opt_dprime;
    Polarization pol;
    pol.lambda = opt_lambda.empty() ? std::vector<long long>(g.vertex_count(), 1) : opt_lambda;
    emit(reports::stability_report(g, f, pol), args.format);
    return 0;
  }

  if (app.got_subcommand("phi")) {
    const CurveGraph g = load(args);
    PhiInputs in;
    in.lambda = phi_lambda.empty() ? std::vector<long long>(g.vertex_count(), 1) : phi_lambda;
    in.omega = omega_opt->count() > 0 ? opt_omega : dualizing_multidegree(g);
    in.degree = degree_opt->count() > 0 ? opt_degree : arithmetic_genus(g) - 1;
    if (dsplit_opt->count() > 0) in.d_split = opt_dsplit;
    if (twist_opt->count() > 0) in.twist = opt_twist;
    emit(reports::phi_report(g, in, compute_phi(in, g)), args.format);
    return 0;
  }

  throw jacstrat::InvariantError("unhandled subcommand");
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const jacstrat::SumMismatchError& err) {
    std::cerr << "error[sum-mismatch]: " << err.what() << '\n';
    return 2;
  } catch (const jacstrat::ValidationError& err) {
    std::cerr << "error[validation]: " << err.what() << '\n';
    return 2;
  } catch (const jacstrat::CapExceededError& err) {
    std::cerr << "error[cap]: " << err.what() << '\n';
    return 3;
  } catch (const jacstrat::InvariantError& err) {
    std::cerr << "error[invariant]: " << err.what() << '\n';
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "error[internal]: " << err.what() << '\n';
    return 4;
  }
}
