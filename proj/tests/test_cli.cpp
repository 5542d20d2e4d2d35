#include "doctest.h"

#include "report.hpp"

#include "symtope/corpus.hpp"

#include <cstdio>
#include <fstream>

using namespace symtope;
using cli::json;

TEST_CASE("loading complexes") {
  CHECK(cli::load_complex("builtin:rp2").top_facets().size() == 10);
  CHECK_THROWS_AS(cli::load_complex("builtin:nope"), std::out_of_range);
  const std::string path = "symtope_cli_test_complex.json";
  {
    std::ofstream out(path);
    out << R"({"name": "strip", "facets": [[1,2,3],[2,3,4]]})";
  }
  auto c = cli::load_complex(path);
  CHECK(c.name() == "strip");
  CHECK(c.top_facets().size() == 2);
  {
    std::ofstream out(path);
    out << R"({"name": "bad", "facets": [[1,2,)";
  }
  CHECK_THROWS_AS(cli::load_complex(path), std::invalid_argument);
  {
    std::ofstream out(path);
    out << R"({"facets": [[0,1]]})";
  }
  CHECK_THROWS_AS(cli::load_complex(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("complex JSON round trip") {
  for (const auto &f : corpus()) {
    json j = cli::complex_to_json(f.complex);
    auto back = cli::complex_from_json(json::parse(j.dump()));
    CHECK(back.facets() == f.complex.facets());
    CHECK(back.name() == f.name);
  }
}

TEST_CASE("analyze rp2 with h*") {
  cli::AnalyzeOptions o;
  o.hstar = true;
  o.cohomology = false;
  json r = cli::analyze(corpus_fixture("rp2").complex, o);
  CHECK(r["schema"] == "symtope/1");
  const json &h = r["polytopes"]["homology"];
  CHECK(h["crosspolytope"] == true);
  CHECK(h["spanning"] == false);
  CHECK(h["reflexivity"]["reflexive"] == true);
  CHECK(h["hstar"] == json::parse("[1,10,45,120,210,1276,210,120,45,10,1]"));
  CHECK(r["mandatory_guard_exceeded"] == false);
  // round trip
  CHECK(json::parse(r.dump()) == r);
}

TEST_CASE("analyze bjorner with the Groebner basis") {
  cli::AnalyzeOptions o;
  o.groebner = true;
  o.cohomology = false;
  o.trials = 100;
  json r = cli::analyze(corpus_fixture("bjorner").complex, o);
  const json &g = r["polytopes"]["homology"]["groebner"];
  CHECK(g["squarefree_leads"] == false);
  CHECK(g["rut_obstruction"] == true);
  CHECK(g["division_trials"]["failures"] == 0);
}

TEST_CASE("guards are reported per field") {
  cli::AnalyzeOptions o;
  o.hstar = true;
  o.max_points = 50;
  json r = cli::analyze(corpus_fixture("bjorner").complex, o);
  CHECK(r["polytopes"]["homology"]["skipped"]["hstar"] == "max-points");
  CHECK(r["polytopes"]["homology"]["reflexivity"]["reflexive"] == true);
  CHECK(r["mandatory_guard_exceeded"] == true);
}

TEST_CASE("every builtin analyzes with default options") {
  cli::AnalyzeOptions o;
  for (const auto &f : corpus()) {
    json r = cli::analyze(f.complex, o);
    CHECK(r["schema"] == "symtope/1");
    for (auto &[which, p] : r["polytopes"].items()) {
      CHECK(p.contains("dim"));
      const bool refl = p.contains("reflexivity") || p["skipped"].contains("reflexivity");
      CHECK(refl);
      const bool model = p.contains("model") || p["skipped"].contains("model");
      CHECK(model);
    }
    CHECK(json::parse(r.dump()) == r);
  }
}

TEST_CASE("compare the two spheres") {
  cli::AnalyzeOptions o;
  o.homology = false;
  json r = cli::compare(corpus_fixture("sphere_a").complex, corpus_fixture("sphere_b").complex, o);
  CHECK(r["sphere_route"]["facet_ridge_graphs_isomorphic"] == false);
  CHECK(r["fingerprints"]["cohomology"]["a"]["dim"] == 13);
}

TEST_CASE("sweep subcomplexes of the tetrahedron boundary") {
  cli::AnalyzeOptions o;
  json r = cli::sweep_subcomplexes(corpus_fixture("tetra_boundary").complex, o);
  CHECK(r["subcomplexes"] == 15);
  CHECK(r["counterexamples"].empty());
  o.max_subsets = 3;
  CHECK(cli::sweep_subcomplexes(corpus_fixture("tetra_boundary").complex, o)["skipped"]["sweep"] == "max-subsets");
}

TEST_CASE("tables are deterministic") {
  json r = cli::corpus_list();
  CHECK(cli::render_table(r) == cli::render_table(cli::corpus_list()));
  CHECK(r["fixtures"].size() == corpus().size());
}

TEST_CASE("column order for the Groebner basis") {
  cli::AnalyzeOptions o;
  o.groebner = true;
  o.cohomology = false;
  o.trials = 50;
  o.column_order = {9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
  json r = cli::analyze(corpus_fixture("rp2").complex, o);
  const json &g = r["polytopes"]["homology"]["groebner"];
  CHECK(g["size"] == 10);
  CHECK(g["squarefree_leads"] == true);
  CHECK(g["division_trials"]["failures"] == 0);
  o.column_order = {0, 0, 1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(cli::analyze(corpus_fixture("rp2").complex, o), std::invalid_argument);
}

TEST_CASE("dump output") {
  cli::AnalyzeOptions o;
  o.cohomology = false;
  o.facets = true;
  o.groebner = true;
  o.dump = true;
  o.trials = 5;
  json r = cli::analyze(corpus_fixture("triangle").complex, o);
  const json &h = r["polytopes"]["homology"];
  CHECK(h["matrix"]["rows"] == 3);
  CHECK(h["matrix"]["data"].size() == 9);
  CHECK(h["facet_list"].size() == 6);
  CHECK(h["facet_list"][0]["vertices"].size() == 2);
  CHECK(h["groebner"]["basis"].size() == h["groebner"]["size"]);
}
