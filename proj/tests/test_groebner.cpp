#include "doctest.h"
#include "support.hpp"

#include "symtope/corpus.hpp"
#include "symtope/groebner.hpp"
#include "symtope/invariants.hpp"

using namespace symtope;

namespace {

const SimplicialComplex &fx(const char *name) { return corpus_fixture(name).complex; }

Exponent mono(std::size_t vars, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Exponent e(vars, 0);
  for (auto [v, x] : entries)
    e[v] = x;
  return e;
}

} // namespace

TEST_CASE("variable names") {
  CHECK(variable_name(0) == "z");
  CHECK(variable_name(plus_var(0)) == "x+1");
  CHECK(variable_name(minus_var(2)) == "x-3");
}

TEST_CASE("monomial order") {
  // higher degree wins
  CHECK(monomial_less(mono(3, {{1, 1}}), mono(3, {{0, 2}})));
  // equal degree: larger exponent at the first differing variable is smaller
  CHECK(monomial_less(mono(3, {{0, 2}}), mono(3, {{1, 1}, {2, 1}})));
  CHECK(monomial_less(mono(3, {{1, 1}, {2, 1}}), mono(3, {{2, 2}})));
  CHECK_FALSE(monomial_less(mono(3, {{2, 2}}), mono(3, {{2, 2}})));
}

TEST_CASE("saturation") {
  // conv(+-e1, +-e2, +-(e1+e2)... ) with the column 2e1 adds e1 back
  IntegerMatrix a{{2, 0}, {0, 1}};
  IntegerMatrix s = saturate(a);
  CHECK(s.cols() == 3);
  // incidence-certified matrices are already saturated
  IntegerMatrix b = top_boundary_map(fx("bjorner"));
  CHECK(saturate(b) == b);
}

TEST_CASE("Groebner basis of the hexagon") {
  IntegerMatrix a = top_boundary_map(fx("triangle"));
  auto gb = groebner_basis(saturate(a));
  GBDiagnostics d = gb_diagnostics(gb);
  CHECK(d.squarefree_leads);
  CHECK(d.type_counts["4"] == 3);
  for (const auto &b : gb)
    CHECK(binomial_in_ideal(a, b));
}

TEST_CASE("Groebner basis of bjorner") {
  IntegerMatrix a = top_boundary_map(fx("bjorner"));
  auto gb = groebner_basis(saturate(a));
  GBDiagnostics d = gb_diagnostics(gb);
  CHECK_FALSE(d.squarefree_leads);
  CHECK(d.type_counts["3"] == 252);
  CHECK(d.type_counts["4"] == 11);
  CHECK(d.type_counts["1a"] + d.type_counts["1b"] == 672);
  CHECK(rut_obstruction(a));
  bool critical = false;
  for (const auto &b : gb) {
    CHECK(monomial_less(b.trail, b.lead));
    if (b.type == "3" && b.lead[plus_var(0)] == 2 && b.lead[0] == 0 && b.trail[0] == 2)
      critical = true;
  }
  CHECK(critical);
}

TEST_CASE("RUT obstruction needs corank one") {
  CHECK_FALSE(rut_obstruction(top_boundary_map(fx("tetra_boundary"))));
  CHECK_THROWS_AS(rut_obstruction(top_boundary_map(fx("skeleton_3_6"))), std::domain_error);
}

TEST_CASE("normal forms") {
  IntegerMatrix a = top_boundary_map(fx("rp2"));
  auto gb = groebner_basis(saturate(a));
  for (const auto &b : gb)
    CHECK(normal_form(b.lead, gb) == normal_form(b.trail, gb));
  GBDiagnostics d = gb_diagnostics(gb);
  CHECK(d.squarefree_leads);
  CHECK(d.type_counts.size() == 1);
  CHECK(d.type_counts["4"] == 10);
}

TEST_CASE("division closure trials are seeded") {
  IntegerMatrix a = top_boundary_map(fx("tetra_boundary"));
  IntegerMatrix s = saturate(a);
  auto gb = groebner_basis(s);
  auto t1 = division_closure_trials(s, gb, 200, 9);
  auto t2 = division_closure_trials(s, gb, 200, 9);
  CHECK(t1.trials == 200);
  CHECK(t1.failures == 0);
  CHECK(t2.failures == t1.failures);
}

TEST_CASE("exhaustive fiber check") {
  for (const char *name : {"triangle", "tetra_boundary"}) {
    IntegerMatrix s = saturate(top_boundary_map(fx(name)));
    auto gb = groebner_basis(s);
    for (int deg = 1; deg <= 3; ++deg) {
      FiberCheck f = exhaustive_fiber_check(s, gb, deg);
      CHECK(f.bad_fibers == 0);
      CHECK(f.monomials > 0);
    }
  }
}

TEST_CASE("a wrong basis fails the fiber check") {
  IntegerMatrix s = saturate(top_boundary_map(fx("tetra_boundary")));
  auto gb = groebner_basis(s);
  std::vector<Binomial> partial;
  for (const auto &b : gb)
    if (b.type == "4")
      partial.push_back(b);
  CHECK(exhaustive_fiber_check(s, partial, 2).bad_fibers > 0);
}

TEST_CASE("triangulations from the Groebner basis") {
  IntegerMatrix seg{{1}};
  auto gs = groebner_basis(saturate(seg));
  Triangulation ts = triangulation_from_gb(saturate(seg), gs);
  CHECK(ts.cells.size() == 2);
  CHECK(ts.total_volume == 2);

  IntegerMatrix hex = saturate(top_boundary_map(fx("triangle")));
  Triangulation th = triangulation_from_gb(hex, groebner_basis(hex));
  CHECK(th.total_volume == 6);
  CHECK(th.all_unimodular);

  IntegerMatrix rp2 = saturate(top_boundary_map(fx("rp2")));
  Triangulation tr = triangulation_from_gb(rp2, groebner_basis(rp2));
  CHECK(tr.lattice_determinant == 2);
  CHECK(tr.total_volume == 2048);
  CHECK(tr.all_unimodular);
}

TEST_CASE("triangulation volume matches h*") {
  for (const char *name : {"tetra_boundary", "k4", "cone_c4"}) {
    for (int which = 0; which < 2; ++which) {
      IntegerMatrix a = which == 0 ? top_boundary_map(fx(name)) : top_boundary_map(fx(name)).transpose();
      IntegerMatrix s = saturate(a);
      Triangulation t = triangulation_from_gb(s, groebner_basis(s));
      CHECK(t.total_volume == ehrhart_hstar(polytope_from_matrix(a)).normalized_volume());
    }
  }
}
