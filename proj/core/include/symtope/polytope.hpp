#pragma once

#include "symtope/complex.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace symtope {

struct Facet {
  RatVector normal;                // ambient normal inside aff(P), w.x = 1 on the facet
  RatVector lattice_normal;        // same functional in lattice-basis coordinates
  std::vector<int> vertex_indices; // +j / -j for the j-th (1-based) column of the reduced matrix
};

struct HullOptions {
  std::size_t max_dim = 14;
  std::size_t max_vertices = 160;
  std::size_t max_rays = 2'000'000;
};

// Vertices of conv[A | -A] in dimension <= max_dim, as facets in lattice coordinates.
// Points are integer vectors spanning R^r; the origin must be interior.
struct HullResult {
  std::vector<IntVector> normals; // primitive integer u with u.p <= beta on all points
  std::vector<Integer> offsets;   // beta > 0
  std::vector<std::vector<std::size_t>> incidence; // tight point indices per facet
};
HullResult double_description(const std::vector<IntVector> &points, const HullOptions &opts = {});

// Exact LP feasibility: is target a convex combination of points?
bool in_convex_hull(const std::vector<IntVector> &points, const IntVector &target);

class CSPolytope {
public:
  // Reduces A (drops zero columns, merges equal/antipodal columns, drops non-vertex columns).
  explicit CSPolytope(const IntegerMatrix &a);

  const IntegerMatrix &generators() const { return A_; }
  std::size_t ambient_dim() const { return A_.rows(); }
  std::size_t column_count() const { return A_.cols(); }
  std::size_t vertex_count() const { return 2 * A_.cols(); }
  std::size_t dimension() const { return dim_; }
  const SNFResult &snf() const { return *snf_; }

  // Columns generate im_R(A) cap Z^m; rows lattice_rows() of this basis form a lower-triangular block.
  const IntegerMatrix &lattice_basis() const { return basis_; }
  const IntegerMatrix &lattice_coordinates() const { return coords_; } // r x n
  IntVector lattice_coordinates_of(const IntVector &x) const;           // throws if x is not in the lattice
  IntVector ambient_point(const std::vector<long> &y) const;
  // Index of the lattice spanned by the lattice points (= the columns) in aff(P) cap Z^m.
  Integer spanned_index() const;

  // For each input column: reduced column index and sign, or nullopt for dropped columns.
  const std::vector<std::optional<std::pair<std::size_t, int>>> &source_map() const { return source_; }
  bool vertices_certified_by_incidence() const { return incidence_certified_; }
  const std::vector<std::string> &warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  const std::vector<Facet> &facets(const HullOptions &opts = {}) const;
  bool facets_computed() const;

  // Coordinates in lattice basis of the vertex with signed 1-based index.
  IntVector vertex_lattice_coordinates(int signed_index) const;

private:
  IntegerMatrix A_;
  std::size_t dim_ = 0;
  std::shared_ptr<SNFResult> snf_;
  IntegerMatrix basis_;
  IntegerMatrix coords_;
  std::vector<std::size_t> basis_rows_;
  std::vector<std::optional<std::pair<std::size_t, int>>> source_;
  bool incidence_certified_ = false;
  std::vector<std::string> warnings_;

  struct FacetCache {
    std::mutex mu;
    std::optional<std::vector<Facet>> facets;
  };
  std::shared_ptr<FacetCache> cache_ = std::make_shared<FacetCache>();
};

CSPolytope polytope_from_matrix(const IntegerMatrix &a);
CSPolytope homology_polytope(const SimplicialComplex &c);
CSPolytope cohomology_polytope(const SimplicialComplex &c);

// Matrix used by homology_polytope / cohomology_polytope (top-dimensional part).
IntegerMatrix top_boundary_map(const SimplicialComplex &c);

std::size_t dimension(const CSPolytope &p);
const IntegerMatrix &affine_hull_basis(const CSPolytope &p);
const std::vector<Facet> &facets_hull(const CSPolytope &p, const HullOptions &opts = {});

struct FacetLabeling {
  RatVector ell;                   // one entry per column of the input matrix
  std::vector<std::size_t> support; // columns with |ell| = 1
  RatVector normal;                // ambient normal w
};

FacetLabeling facet_labeling(const CSPolytope &p, const Facet &facet);
bool verify_spanning_forest(const IntegerMatrix &boundary, const FacetLabeling &labeling);
bool verify_spanning_forest(const SimplicialComplex &c, const FacetLabeling &labeling);

Integer equal_weight_partition_count(const IntVector &multiset);
Integer facet_count_corank1(const IntVector &a);

bool is_crosspolytope(const CSPolytope &p);

struct PolarVertex {
  RatVector ambient;
  RatVector lattice;
  bool integral = false;
};
PolarVertex polar_vertex(const CSPolytope &p, const Facet &facet);
// Full-column-rank case: facets are indexed by sign vectors b; the polar vertex solves Y^T w = b.
PolarVertex crosspolytope_polar_vertex(const CSPolytope &p, const std::vector<int> &signs);

struct LatticeCountOptions {
  std::uint64_t max_points = 25'000'000;
  std::uint64_t max_nodes = 0; // search-tree nodes; 0 means 16 * max_points
  bool count_interior = false;
  unsigned threads = 0; // 0: SYMTOPE_THREADS or 1
  HullOptions hull;
};

struct LatticeCount {
  std::uint64_t total = 0;
  std::uint64_t interior = 0;
};

using PointSink = std::function<void(const std::vector<long> &)>;

// Lattice points of kP in lattice-basis coordinates.
LatticeCount lattice_points(const CSPolytope &p, long k, const LatticeCountOptions &opts = {},
                            const PointSink &sink = nullptr);

unsigned configured_threads();

} // namespace symtope
