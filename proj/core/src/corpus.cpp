#include "symtope/corpus.hpp"

#include <stdexcept>
#include <string_view>

namespace symtope {

namespace {

// Short notation: "125" is {1,2,5}; only single-digit vertex labels.
std::vector<Face> digits(std::initializer_list<std::string_view> words) {
  std::vector<Face> out;
  for (auto w : words) {
    Face f;
    for (char ch : w)
      f.push_back(ch - '0');
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Face> k_subsets(int n, int k) {
  std::vector<Face> out;
  Face cur;
  auto rec = [&](auto &self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Fixture> build() {
  std::vector<Fixture> fx;
  auto add = [&](std::string name, std::string desc, std::vector<Face> facets) {
    fx.push_back({name, std::move(desc), build_complex(facets, name)});
  };
  const auto rp2 = digits({"125", "126", "134", "136", "145", "234", "235", "246", "356", "456"});
  add("rp2", "6-vertex triangulation of the real projective plane", rp2);
  auto bj = rp2;
  bj.push_back({1, 2, 3});
  add("bjorner", "rp2 with the extra facet 123", bj);
  add("moebius_strip", "6-facet Moebius strip", digits({"124", "135", "136", "146", "235", "245"}));
  add("moore_z3", "Moore space for Z/3 in degree 1",
      digits({"126", "127", "129", "135", "138", "139", "157", "168", "234", "237", "238", "246", "289", "345",
              "379", "458", "468", "578", "789"}));
  const auto m989 = digits({"1234", "1235", "1246", "1257", "1268", "1278", "1345", "1456", "1567",
                            "1679", "1689", "1789", "2349", "2359", "2456", "2459", "2567", "2678",
                            "3458", "3478", "3479", "3589", "3678", "3679", "3689", "4589", "4789"});
  add("manifold_3_9_989", "minimal triangulation of the twisted S^2 x S^1", m989);
  fx.push_back({"manifold_3_9_989_stellar", "manifold_3_9_989 with 1234 stellarly subdivided (new vertex 10)",
                stellar_subdivide(build_complex(m989), {1, 2, 3, 4}, 10)});
  fx.back().complex = SimplicialComplex(fx.back().complex.facets(), "manifold_3_9_989_stellar");
  add("sphere_a", "shellable 2-sphere on 9 vertices whose facet-ridge graph is triangle-free",
      digits({"123", "125", "136", "159", "168", "189", "234", "245", "347", "367", "459", "478", "489", "678"}));
  add("sphere_b", "shellable 2-sphere on 9 vertices whose facet-ridge graph has a triangle",
      digits({"123", "124", "135", "145", "237", "248", "279", "289", "356", "367", "456", "467", "478", "789"}));
  add("skeleton_3_6", "3-skeleton of the 6-simplex", k_subsets(7, 4));
  add("tetra_boundary", "boundary of the tetrahedron", k_subsets(4, 3));
  fx.push_back({"triangle", "cycle C_3 as a 1-complex", graph_complex(cycle_graph(3), "triangle")});
  add("two_triangles", "two triangles sharing the edge 23", digits({"123", "234"}));
  {
    auto c = cone_over_graph(complete_bipartite_graph(3, 3), 7);
    fx.push_back({"cone_k33", "cone over K_{3,3} with apex 7", SimplicialComplex(c.facets(), "cone_k33")});
  }
  {
    auto c = cone_over_graph(cycle_graph(4), 5);
    fx.push_back({"cone_c4", "cone over C_4 with apex 5", SimplicialComplex(c.facets(), "cone_c4")});
  }
  fx.push_back({"k4", "complete graph K_4 as a 1-complex", graph_complex(complete_graph(4), "k4")});
  return fx;
}

} // namespace

const std::vector<Fixture> &corpus() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture &corpus_fixture(const std::string &name) {
  for (const auto &f : corpus())
    if (f.name == name)
      return f;
  throw std::out_of_range("unknown builtin fixture: " + name);
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto &f : corpus())
    out.push_back(f.name);
  return out;
}

} // namespace symtope
