#include "report.hpp"

#include "CLI11.hpp"

#include <iostream>

using symtope::cli::json;

namespace {

void add_guards(CLI::App *cmd, symtope::cli::AnalyzeOptions &o) {
  cmd->add_option("--max-points", o.max_points, "Lattice point guard per enumeration")->capture_default_str();
  cmd->add_option("--max-cells", o.max_cells, "Triangulation cell guard")->capture_default_str();
  cmd->add_option("--max-minors", o.max_minors, "Minor-search guard for planarity")->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Symmetric homology and cohomology polytopes of simplicial complexes"};
  app.require_subcommand(1);

  symtope::cli::AnalyzeOptions opts;
  std::string which = "both";
  bool as_json = false, as_table = false;
  std::string source, source_b;

  auto output_flags = [&](CLI::App *cmd) {
    auto j = cmd->add_flag("--json", as_json, "Machine-readable output (schema symtope/1)");
    auto t = cmd->add_flag("--table", as_table, "Human-readable table (default)");
    j->excludes(t);
  };
  auto which_flag = [&](CLI::App *cmd) {
    cmd->add_option("--which", which, "homology, cohomology or both")
        ->check(CLI::IsMember({"homology", "cohomology", "both"}))
        ->capture_default_str();
  };

  auto *analyze = app.add_subcommand("analyze", "Report on one complex");
  analyze->add_option("complex", source, "JSON file or builtin:NAME")->required();
  which_flag(analyze);
  analyze->add_flag("--hstar", opts.hstar, "Ehrhart h*-vector");
  analyze->add_flag("--hilbert", opts.hilbert, "Hilbert function, numerator and IDP witnesses");
  analyze->add_flag("--groebner", opts.groebner, "Groebner basis diagnostics");
  analyze->add_flag("--triangulate", opts.triangulate, "Triangulation from the Groebner basis");
  analyze->add_flag("--facets", opts.facets, "Facet count from the convex hull");
  analyze->add_flag("--dump", opts.dump, "Include the matrix, the facet list and the full Groebner basis");
  analyze->add_option("--seed", opts.seed, "Seed for division-closure trials")->capture_default_str();
  analyze->add_option("--trials", opts.trials, "Division-closure trials")->capture_default_str();
  analyze->add_option("--column-order", opts.column_order, "Permutation of the saturated columns for the Groebner basis")
      ->delimiter(',');
  add_guards(analyze, opts);
  output_flags(analyze);

  auto *compare = app.add_subcommand("compare", "Fingerprints of two complexes");
  compare->add_option("a", source, "JSON file or builtin:NAME")->required();
  compare->add_option("b", source_b, "JSON file or builtin:NAME")->required();
  which_flag(compare);
  compare->add_flag("--hstar", opts.hstar, "Include h*-vectors in the fingerprints");
  compare->add_flag("--facets", opts.facets, "Include facet counts in the fingerprints");
  add_guards(compare, opts);
  output_flags(compare);

  auto *corpus = app.add_subcommand("corpus", "Built-in fixtures");
  auto *list = corpus->add_subcommand("list", "List built-in fixtures");
  corpus->require_subcommand(1);
  output_flags(list);

  auto *sweep = app.add_subcommand("sweep-subcomplexes", "Reflexivity of every same-dimension subcomplex");
  sweep->add_option("complex", source, "JSON file or builtin:NAME")->required();
  sweep->add_option("--max-subsets", opts.max_subsets, "Largest number of subcomplexes")->capture_default_str();
  output_flags(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  opts.homology = which != "cohomology";
  opts.cohomology = which != "homology";

  json report;
  try {
    if (*analyze) {
      report = symtope::cli::analyze(symtope::cli::load_complex(source), opts);
    } else if (*compare) {
      report = symtope::cli::compare(symtope::cli::load_complex(source), symtope::cli::load_complex(source_b), opts);
    } else if (*list) {
      report = symtope::cli::corpus_list();
    } else if (*sweep) {
      report = symtope::cli::sweep_subcomplexes(symtope::cli::load_complex(source), opts);
    }
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (as_json)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << symtope::cli::render_table(report);
  return report.value("mandatory_guard_exceeded", false) ? 2 : 0;
}
