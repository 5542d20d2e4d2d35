#pragma once

#include "symtope/linalg.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symtope {

using Face = std::vector<int>; // strictly increasing vertex labels

// Facet-list representation; faces of each dimension are stored lex-sorted and
// their positions are the row/column indices of every boundary matrix.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Face> facets, std::string name = {});

  const std::string &name() const { return name_; }
  const std::vector<int> &vertices() const { return vertices_; }
  const std::vector<Face> &facets() const { return facets_; }
  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  bool empty() const { return facets_.empty(); }

  const std::vector<Face> &faces(int j) const;
  std::optional<std::size_t> find_face(const Face &f) const;
  bool contains(const Face &f) const { return find_face(f).has_value(); }
  std::vector<long> f_vector() const;
  bool is_pure() const;

  // Facets of top dimension in lex order; equals faces(dim()).
  const std::vector<Face> &top_facets() const { return faces(dim()); }
  SimplicialComplex pure_part() const;
  SimplicialComplex subcomplex(const std::vector<std::size_t> &top_facet_indices) const;
  bool is_subcomplex_of(const SimplicialComplex &other) const;

private:
  std::string name_;
  std::vector<int> vertices_;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> faces_;
};

SimplicialComplex build_complex(const std::vector<std::vector<int>> &facet_list, std::string name = {});

class Graph {
public:
  Graph() = default;
  Graph(std::vector<int> vertices, const std::vector<std::pair<int, int>> &edges);

  const std::vector<int> &vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  bool connected() const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

private:
  std::vector<int> vertices_;
  std::vector<std::pair<int, int>> edges_; // u < v, sorted
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

SimplicialComplex graph_complex(const Graph &g, std::string name = {});
Graph one_skeleton(const SimplicialComplex &c);

struct HomologyGroup {
  long free_rank = 0;
  IntVector torsion;
  bool operator==(const HomologyGroup &o) const { return free_rank == o.free_rank && torsion == o.torsion; }
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

std::string to_string(const HomologyGroup &h);

struct ComplexProfile {
  int dim = -1;
  std::vector<long> f_vector;
  bool pure = false;
  bool pseudomanifold = false;
  bool closed = false;
  bool strongly_connected = false;
  std::optional<bool> orientable;
  std::vector<std::size_t> boundary_ridges;
  std::vector<long> free_ridge_count_per_facet;
};

// Rows are (j-1)-faces and columns j-faces, both lex-ordered; faces of
// relative_to are deleted from both sides.
IntegerMatrix boundary_map(const SimplicialComplex &c, int j, const SimplicialComplex *relative_to = nullptr);

HomologyGroup homology(const SimplicialComplex &c, int j);
HomologyGroup relative_homology(const SimplicialComplex &c, const SimplicialComplex &sub, int j);

// Subcomplex generated by the ridges lying in exactly one top facet.
SimplicialComplex boundary_complex(const SimplicialComplex &c);

ComplexProfile classify(const SimplicialComplex &c);

// Vertices are 1..s in the lex order of the top facets.
Graph facet_ridge_graph(const SimplicialComplex &c);

SimplicialComplex cone_over_graph(const Graph &g, std::optional<int> apex = std::nullopt);
Graph whisker(const Graph &g, const std::vector<int> &attach, std::optional<int> first_label = std::nullopt);
SimplicialComplex stellar_subdivide(const SimplicialComplex &c, const Face &facet,
                                    std::optional<int> new_vertex = std::nullopt);

} // namespace symtope
