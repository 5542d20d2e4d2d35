#include "doctest.h"
#include "support.hpp"

#include "symtope/corpus.hpp"

using namespace symtope;

namespace {

const SimplicialComplex &fx(const char *name) { return corpus_fixture(name).complex; }

HomologyGroup group(long free, std::vector<long> torsion = {}) {
  HomologyGroup h;
  h.free_rank = free;
  for (long t : torsion)
    h.torsion.push_back(Integer(t));
  return h;
}

} // namespace

TEST_CASE("corpus") {
  CHECK(corpus().size() >= 13);
  CHECK_THROWS_AS(corpus_fixture("nope"), std::out_of_range);
  CHECK(fx("manifold_3_9_989").f_vector() == std::vector<long>{9, 36, 54, 27});
  CHECK(fx("manifold_3_9_989_stellar").top_facets().size() == 30);
  CHECK(fx("moore_z3").f_vector() == std::vector<long>{9, 27, 19});
  CHECK(fx("skeleton_3_6").top_facets().size() == 35);
  for (const auto &f : corpus())
    CHECK(f.complex.name() == f.name);
}

TEST_CASE("dominated faces are absorbed") {
  auto c = build_complex({{1, 2, 3}, {1, 2}, {3}, {2, 3, 4}});
  CHECK(c.facets().size() == 2);
  CHECK(c.f_vector() == std::vector<long>{4, 5, 2});
}

TEST_CASE("boundary map signs and ordering") {
  auto c = build_complex({{1, 2, 3}});
  IntegerMatrix d1 = boundary_map(c, 1);
  // edges 12, 13, 23; column of uv is e_v - e_u
  CHECK(d1 == IntegerMatrix{{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
  IntegerMatrix d2 = boundary_map(c, 2);
  CHECK(d2 == IntegerMatrix{{1}, {-1}, {1}});
}

TEST_CASE("moebius strip boundary map in lexicographic face order") {
  IntegerMatrix expected{{1, 0, 0, 0, 0, 0},  {0, 1, 1, 0, 0, 0},   {-1, 0, 0, 1, 0, 0}, {0, -1, 0, 0, 0, 0},
                        {0, 0, -1, -1, 0, 0}, {0, 0, 0, 0, 1, 0},   {1, 0, 0, 0, 0, 1},  {0, 0, 0, 0, -1, -1},
                        {0, 1, 0, 0, 1, 0},  {0, 0, 1, 0, 0, 0},   {0, 0, 0, 0, 0, 1},  {0, 0, 0, 1, 0, 0}};
  CHECK(boundary_map(fx("moebius_strip"), 2) == expected);
}

TEST_CASE("homology of the fixtures") {
  CHECK(homology(fx("rp2"), 0) == group(1));
  CHECK(homology(fx("rp2"), 1) == group(0, {2}));
  CHECK(homology(fx("rp2"), 2) == group(0));
  CHECK(homology(fx("bjorner"), 1) == group(0));
  CHECK(homology(fx("bjorner"), 2) == group(1));
  CHECK(homology(fx("moore_z3"), 1) == group(0, {3}));
  CHECK(homology(fx("moore_z3"), 2) == group(0));
  CHECK(homology(fx("manifold_3_9_989"), 2) == group(0, {2}));
  CHECK(homology(fx("manifold_3_9_989"), 3) == group(0));
  CHECK(homology(fx("manifold_3_9_989_stellar"), 2) == group(0, {2}));
  CHECK(homology(fx("skeleton_3_6"), 3) == group(15));
  CHECK(homology(fx("tetra_boundary"), 2) == group(1));
  CHECK(to_string(group(2, {2, 6})) == "Z^2 + Z_2 + Z_6");
}

TEST_CASE("moore space SNF divisors") {
  SNFResult s = smith_normal_form(boundary_map(fx("moore_z3"), 2));
  IntVector expect(18, Integer(1));
  expect.push_back(Integer(3));
  CHECK(s.divisors == expect);
}

TEST_CASE("classification") {
  auto rp2 = classify(fx("rp2"));
  CHECK(rp2.pseudomanifold);
  CHECK(rp2.closed);
  CHECK(rp2.orientable == false);
  auto ms = classify(fx("moebius_strip"));
  CHECK(ms.pseudomanifold);
  CHECK_FALSE(ms.closed);
  CHECK(ms.orientable == false);
  CHECK(ms.boundary_ridges.size() == 6);
  auto bj = classify(fx("bjorner"));
  CHECK_FALSE(bj.pseudomanifold);
  auto two = classify(fx("two_triangles"));
  CHECK(two.orientable == true);
  CHECK(two.free_ridge_count_per_facet == std::vector<long>{2, 2});
  auto sph = classify(fx("sphere_a"));
  CHECK(sph.closed);
  CHECK(sph.orientable == true);
}

TEST_CASE("relative homology and boundary complex") {
  const auto &ms = fx("moebius_strip");
  SimplicialComplex bd = boundary_complex(ms);
  CHECK(bd.f_vector() == std::vector<long>{6, 6});
  CHECK(homology(bd, 1) == group(1));
  // the strip is non-orientable, so H_2(M, dM) vanishes
  CHECK(relative_homology(ms, bd, 2) == group(0));
  const auto &two = fx("two_triangles");
  CHECK(relative_homology(two, boundary_complex(two), 2) == group(1));
}

TEST_CASE("facet-ridge graph") {
  Graph g = facet_ridge_graph(fx("tetra_boundary"));
  CHECK(g == complete_graph(4));
  Graph r = facet_ridge_graph(fx("rp2"));
  CHECK(r.vertex_count() == 10);
  CHECK(r.edge_count() == 15);
}

TEST_CASE("graph constructions") {
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(complete_bipartite_graph(3, 3).edge_count() == 9);
  CHECK(complete_bipartite_graph(3, 3).connected());
  CHECK_FALSE(Graph({1, 2, 3}, {{1, 2}}).connected());
  auto g = graph_complex(Graph({1, 2, 3}, {{1, 2}}));
  CHECK(g.f_vector() == std::vector<long>{3, 1});
  CHECK(one_skeleton(fx("tetra_boundary")) == complete_graph(4));
}

TEST_CASE("cone, whisker and stellar subdivision") {
  auto cone = cone_over_graph(cycle_graph(4));
  CHECK(cone.top_facets().size() == 4);
  CHECK(cone.vertices().size() == 5);
  CHECK_THROWS(cone_over_graph(cycle_graph(4), 2));
  Graph w = whisker(path_graph(2), {1, 2});
  CHECK(w.vertex_count() == 4);
  CHECK(w.edge_count() == 3);
  auto st = stellar_subdivide(fx("tetra_boundary"), {1, 2, 3});
  CHECK(st.top_facets().size() == 6);
  CHECK(homology(st, 2) == group(1));
  CHECK_THROWS(stellar_subdivide(fx("tetra_boundary"), {1, 2}));
}

TEST_CASE("subcomplexes") {
  const auto &bj = fx("bjorner");
  auto sub = bj.subcomplex({1, 2});
  CHECK(sub.top_facets().size() == 2);
  CHECK(sub.is_subcomplex_of(bj));
  CHECK_FALSE(bj.is_subcomplex_of(sub));
  CHECK(fx("rp2").is_subcomplex_of(bj));
}
