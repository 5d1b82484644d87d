#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "riordan/decomposition.hpp"
#include "riordan/error.hpp"
#include "riordan/oracle.hpp"
#include "riordan/report.hpp"
#include "riordan/riordan_graph.hpp"
#include "riordan/traversal.hpp"
#include "riordan/verify.hpp"

#ifndef RIORDAN_GOLDEN_DIR
#define RIORDAN_GOLDEN_DIR ""
#endif

namespace {

using namespace riordan;

constexpr const char* kGrammarHelp =
    "series grammar ('+' is XOR, whitespace ignored):\n"
    "  poly:1+t+t^3\n"
    "  rat:(1)/(1+t+t^2)\n"
    "  named:<catalan|motzkin|pascal_g|pascal_f|fibonacci_f|geometric|zero|one|t>\n"
    "  fix:X=1+t*X^2\n"
    "  win:<trunc>:<poly>   coefficients known only below trunc\n"
    "families for --family: pascal catalan motzkin fibonacci path complete complete_bipartite null star\n";

struct GraphArgs {
  std::string g, f, family;
  std::size_t n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("-g", g, "generating series g");
    cmd->add_option("-f", f, "generating series f");
    cmd->add_option("--family", family, "named family instead of -g/-f");
    cmd->add_option("-n", n, "order")->required()->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  }

  RiordanGraphSpec spec() const {
    if (!family.empty()) {
      const auto fam = parse_family(family);
      require(fam.has_value(), ErrorKind::invalid_spec, "unknown family '" + family + "'");
      return family_spec(*fam, n);
    }
    require(!g.empty() && !f.empty(), ErrorKind::invalid_spec, "give -g and -f, or --family");
    return RiordanGraphSpec::parse(g, f, n);
  }
};

void print_blocks(const DecompositionBlocks& b) {
  std::cout << "odd part X (" << b.x_graph.order() << " vertices, " << b.x_graph.edge_count() << " edges)\n"
            << b.x_graph.adjacency().to_string() << "bridge (" << b.bridge.rows() << "x" << b.bridge.cols() << ")\n"
            << b.bridge.to_string() << "even part Y (" << b.y_graph.order() << " vertices, "
            << b.y_graph.edge_count() << " edges)\n"
            << b.y_graph.adjacency().to_string();
}

void print_flag(const char* name, const Flag& f) {
  std::cout << name << ": " << (f.value ? "yes" : "no");
  if (!f.evidence.empty()) std::cout << " (" << f.evidence << ")";
  std::cout << '\n';
}

Json check_json(const RiordanGraphSpec& spec) {
  Json out;
  out["spec"] = spec.to_string();
  out["n"] = spec.n;
  out["classification"] = to_json(classify_oe(spec));
  out["degree_parity"] = to_json(degree_parity(spec));
  out["euler"] = to_json(eulerian_check(spec));
  out["hamilton_sufficient"] = to_json(hamiltonian_sufficient(spec));
  out["hamilton_obstruction"] = to_json(hamiltonian_obstruction(spec));
  return out;
}

void print_check(const RiordanGraphSpec& spec) {
  const DecompClass c = classify_oe(spec);
  std::cout << "spec " << spec.to_string() << "\n";
  print_flag("o-decomposable", c.o_decomposable);
  print_flag("e-decomposable", c.e_decomposable);
  print_flag("io-decomposable", c.io_decomposable);
  print_flag("ie-decomposable", c.ie_decomposable);
  if (c.oe_isomorphic) print_flag("oe-isomorphic", *c.oe_isomorphic);
  print_flag("oe-bipartite", c.oe_bipartite);
  print_flag("oe-disconnected", c.oe_disconnected);
  std::cout << "checkerboard: " << (c.checkerboard ? "yes" : "no") << "\n";
  const EulerVerdict e = eulerian_check(spec);
  std::cout << "euler: " << to_string(e.kind);
  if (e.endpoints) std::cout << " from " << e.endpoints->first << " to " << e.endpoints->second;
  std::cout << " (" << e.odd_vertices.size() << " odd vertices)\n";
  for (const HamiltonVerdict& h : {hamiltonian_sufficient(spec), hamiltonian_obstruction(spec)}) {
    std::cout << "hamilton: " << to_string(h.status);
    if (h.reason) std::cout << " (" << to_string(*h.reason) << ")";
    if (h.pivot) std::cout << " pivot " << *h.pivot;
    if (!h.witness.empty()) {
      std::cout << " cycle";
      for (auto v : h.witness) std::cout << ' ' << v;
    }
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Binary Riordan graphs"};
  app.require_subcommand(1);
  app.footer(kGrammarHelp);

  GraphArgs build_args, check_args, decomp_args, export_args;
  bool dot = false, json = false, edges = false;
  auto* build = app.add_subcommand("build", "build G_n(g, f) and print its adjacency");
  build_args.attach(build);
  auto* fmt = build->add_option_group("format");
  fmt->add_flag("--dot", dot, "Graphviz DOT");
  fmt->add_flag("--json", json, "JSON report");
  fmt->add_flag("--edges", edges, "edge list");
  fmt->require_option(0, 1);

  bool check_json_out = false;
  auto* check = app.add_subcommand("check", "decomposition classes and traversal verdicts");
  check_args.attach(check);
  check->add_flag("--json", check_json_out, "JSON report");

  bool decomp_json = false;
  auto* decomp = app.add_subcommand("decompose", "odd/even block decomposition");
  decomp_args.attach(decomp);
  decomp->add_flag("--json", decomp_json, "JSON report");

  std::size_t enum_n = 0;
  bool enum_list = false, enum_serial = false;
  auto* enumerate = app.add_subcommand("enumerate", "count labeled Riordan graphs of order n");
  enumerate->add_option("-n", enum_n, "order")->required()->check(CLI::Range(std::size_t{1}, kMaxLabeledOrder));
  enumerate->add_flag("--list", enum_list, "print every graph with a witnessing spec");
  enumerate->add_flag("--serial", enum_serial, "single-threaded");

  std::string suite_name = "all", golden = RIORDAN_GOLDEN_DIR;
  std::uint64_t seed = kDefaultSeed;
  bool verify_json = false, verify_serial = false;
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", suite_name, "all, figures, theorems or conjectures")
      ->check(CLI::IsMember({"all", "figures", "theorems", "conjectures"}));
  verify->add_option("--seed", seed, "seed for the random suites");
  verify->add_option("--golden", golden, "directory holding figN.txt");
  verify->add_flag("--json", verify_json, "JSON report");
  verify->add_flag("--serial", verify_serial, "single-threaded");

  std::string out_dir = ".", stem = "graph";
  auto* exp = app.add_subcommand("export", "write DOT, CSV and JSON files");
  export_args.attach(exp);
  exp->add_option("-o,--out", out_dir, "output directory");
  exp->add_option("--name", stem, "file stem");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*build) {
      const auto spec = build_args.spec();
      const Graph g = build_graph(spec);
      if (dot)
        std::cout << to_dot(g);
      else if (json)
        std::cout << envelope("graph", to_json(spec, g)).dump(2) << "\n";
      else if (edges)
        std::cout << to_edge_list(g);
      else
        std::cout << g.adjacency().to_string();
    } else if (*check) {
      const auto spec = check_args.spec();
      if (check_json_out)
        std::cout << envelope("check", check_json(spec)).dump(2) << "\n";
      else
        print_check(spec);
    } else if (*decomp) {
      const auto spec = decomp_args.spec();
      const auto blocks = decompose(spec);
      if (decomp_json)
        std::cout << envelope("decomposition", to_json(blocks)).dump(2) << "\n";
      else
        print_blocks(blocks);
    } else if (*enumerate) {
      const auto census = enumerate_labeled(enum_n, enum_serial ? Execution::serial : Execution::parallel);
      std::cout << "n=" << census.n << " count=" << census.count << " expected=" << census.expected
                << " collisions=" << census.collisions.size() << "\n";
      if (enum_list)
        for (const auto& lg : census.graphs)
          std::cout << lg.witness.to_string() << "  edges=" << lg.graph.edge_count() << "\n"
                    << lg.graph.adjacency().to_string();
    } else if (*verify) {
      VerifyOptions opts;
      opts.seed = seed;
      opts.exec = verify_serial ? Execution::serial : Execution::parallel;
      opts.budget = OracleBudget::from_env();
      opts.golden_dir = golden;
      const VerifyReport report = run_suite(*parse_suite(suite_name), opts);
      if (verify_json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        std::cout << to_text(report);
      return report.passed() ? 0 : 3;
    } else if (*exp) {
      const auto spec = export_args.spec();
      const Graph g = build_graph(spec);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      std::ofstream(dir / (stem + ".dot")) << to_dot(g);
      std::ofstream(dir / (stem + ".csv")) << to_csv(g);
      Json report = to_json(spec, g);
      report["classification"] = check_json(spec);
      std::ofstream(dir / (stem + ".json")) << envelope("graph", report).dump(2) << "\n";
      std::cout << "wrote " << (dir / stem).string() << ".{dot,csv,json}\n";
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.kind() == ErrorKind::invalid_spec) {
      std::cerr << kGrammarHelp;
      return 2;
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
