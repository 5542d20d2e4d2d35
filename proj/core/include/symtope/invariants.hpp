#pragma once

#include "symtope/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symtope {

struct SpanningReport {
  bool spanning = false;
  Integer alpha_max;
  bool idp_excluded = false; // not spanning, hence not IDP
};

SpanningReport spanning_report(const IntegerMatrix &a);

enum class ReflexivityRoute { AllDivisorsOne, TorsionParity, TorsionAtLeast3, PolarIntegrality };
std::string to_string(ReflexivityRoute route);

struct ReflexivityVerdict {
  bool reflexive = false;
  ReflexivityRoute route = ReflexivityRoute::PolarIntegrality;
  std::optional<RatVector> witness; // torsion vector or polar vertex (lattice coordinates)
  std::string witness_kind;         // "torsion-vector" or "polar-vertex"
};

// For rational v: v.b is an integer for every b in {-1,1}^s.
bool forall_sign_vectors_integral(const RatVector &v);
bool forall_sign_vectors_integral_exhaustive(const RatVector &v);

// Full-column-rank polytopes use the torsion vectors; all others enumerate facets.
ReflexivityVerdict is_reflexive(const CSPolytope &p, const HullOptions &hull = {});
ReflexivityVerdict reflexive_by_polar_vertices(const CSPolytope &p, const HullOptions &hull = {});
// Crosspolytope polar vertices Y^{-T} b, all b at once.
bool crosspolytope_polar_vertices_integral(const CSPolytope &p, const Integer &scale = 1);

// Requires H_d = 0; otherwise falls back to is_reflexive(homology_polytope(c)).
ReflexivityVerdict reflexivity_by_topology(const SimplicialComplex &c);

struct ForestReport {
  std::vector<std::vector<std::size_t>> forests; // top-facet indices of each basis
  std::vector<ReflexivityVerdict> verdicts;
  std::optional<bool> reflexive; // true when every forest passes, otherwise inconclusive
};
ForestReport reflexivity_via_forests(const SimplicialComplex &c, std::uint64_t max_bases = 100'000);

bool dual_dilation_check(const CSPolytope &p, const HullOptions &hull = {});

struct HStarVector {
  IntVector coefficients; // h*_0 .. h*_dim
  Integer normalized_volume() const;
  bool palindromic() const;
  std::optional<IntVector> gamma() const;
};

enum class EhrhartMethod { Reciprocity, Direct };

struct EhrhartOptions {
  EhrhartMethod method = EhrhartMethod::Reciprocity;
  LatticeCountOptions counting;
};

HStarVector ehrhart_hstar(const CSPolytope &p, const EhrhartOptions &opts = {});
// h_i = sum_{j<=i} (-1)^{i-j} C(d+1, i-j) f(j) for i < values.size().
IntVector numerator_from_values(const std::vector<Integer> &values, std::size_t d);
Integer ehrhart_value(const HStarVector &h, long k);

struct HilbertOptions {
  std::uint64_t max_points = 25'000'000;
  long k_max = -1; // -1: 2 * dim, truncated by max_points
  LatticeCountOptions counting;
};

struct HilbertResult {
  std::vector<std::uint64_t> values; // HF(0..k_max)
  IntVector numerator;              // coefficients 0..k_max
  long k_max = 0;
  bool truncated = false; // k_max < 2 * dim because of max_points
  bool consistent = true; // coefficients above dim vanish
};

HilbertResult hilbert_function(const CSPolytope &p, const HilbertOptions &opts = {},
                               const HStarVector *hstar = nullptr);

struct IDPOptions {
  HilbertOptions hilbert;
  EhrhartOptions ehrhart;
  std::size_t witness_cap = 10'000;
};

struct IDPReport {
  HStarVector hstar;
  IntVector hilbert_numerator;
  std::vector<std::uint64_t> ehrhart_values;
  std::vector<std::uint64_t> hilbert_values;
  long idp_up_to = 0; // HF(k) = E(k) for all k <= idp_up_to
  bool idp = false;   // no failure up to k_max
  bool truncated = false;
  std::optional<long> first_failure;
  std::uint64_t witness_count = 0;
  std::vector<IntVector> witnesses; // ambient coordinates, capped
};

IDPReport idp_report(const CSPolytope &p, const IDPOptions &opts = {});

// Sum of |det| over a pulling triangulation of the boundary coned at the origin.
Integer normalized_volume_by_pulling(const CSPolytope &p, const HullOptions &hull = {},
                                     std::uint64_t max_cells = 5'000'000);

} // namespace symtope
