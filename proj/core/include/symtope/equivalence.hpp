#pragma once

#include "symtope/invariants.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symtope {

// Rows are the sorted vertices; the column of edge uv (u < v) is e_v - e_u.
IntegerMatrix incidence_matrix(const Graph &g);
CSPolytope sep_of_graph(const Graph &g);

struct OrientationSigns {
  std::vector<int> epsilon; // one sign per top facet, lex order
};

// Closed case: kernel of the top boundary map; with boundary: kernel of the relative map.
OrientationSigns orientation_signs(const SimplicialComplex &c);
// Every interior-ridge row of boundary * D(eps) has exactly one +1 and one -1.
bool incidence_shaped(const SimplicialComplex &c, const OrientationSigns &signs);

inline LatticeCountOptions small_counting() {
  LatticeCountOptions c;
  c.max_points = 2'000'000;
  return c;
}

struct FingerprintOptions {
  bool facets = true;
  bool hstar = true;
  bool volume = true; // from h* when present, otherwise a pulling triangulation
  HullOptions hull;
  LatticeCountOptions counting = small_counting();
  std::uint64_t max_minors = 20'000'000; // branch-set assignments in the planarity test
};

struct Fingerprint {
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::optional<std::size_t> facet_count;
  std::optional<Integer> normalized_volume;
  std::optional<HStarVector> hstar;
  std::map<std::string, std::string> skipped; // field -> guard name
};

Fingerprint fingerprint(const CSPolytope &p, const FingerprintOptions &opts = {});
// Compares dim, vertex count and every optional field present on both sides.
bool fingerprints_match(const Fingerprint &a, const Fingerprint &b);

enum class Which { Homology, Cohomology };
std::string to_string(Which w);

struct ModelVerdict {
  std::string route; // model route, e.g. "closed-dual-graph-model"
  std::string model; // description of the predicted polytope
  std::optional<Fingerprint> actual, predicted;
  std::optional<bool> fingerprint_match; // absent when the route predicts no model
};

// Throws std::domain_error when no route applies.
ModelVerdict model_polytope(const SimplicialComplex &c, Which which, const FingerprintOptions &opts = {});

// Minor search over branch-set assignments; throws GuardExceeded("max-minors") past the guard.
bool is_planar(const Graph &g, std::uint64_t max_minors = 20'000'000);
bool contains_minor_k5(const Graph &g, std::uint64_t max_minors = 20'000'000);
bool contains_minor_k33(const Graph &g, std::uint64_t max_minors = 20'000'000);

using RotationSystem = std::map<int, std::vector<int>>; // cyclic neighbor order per vertex
std::optional<RotationSystem> find_planar_rotation(const Graph &g, std::uint64_t max_tries = 5'000'000);
Graph planar_dual(const Graph &g, const RotationSystem &rotation);

std::optional<std::vector<int>> graph_isomorphism(const Graph &a, const Graph &b);
bool has_triangle(const Graph &g);

// Both inputs are taken to be shellable spheres; compares facet-ridge graphs.
bool shellable_sphere_equivalence(const SimplicialComplex &a, const SimplicialComplex &b);

std::optional<int> cone_apex(const SimplicialComplex &c);

} // namespace symtope
