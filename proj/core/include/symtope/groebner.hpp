#pragma once

#include "symtope/polytope.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symtope {

// Variable 0 is z (the origin); column l of A gives x_{l+} = 2l+1 and x_{l-} = 2l+2.
using Exponent = std::vector<int>;

inline std::size_t plus_var(std::size_t column) { return 2 * column + 1; }
inline std::size_t minus_var(std::size_t column) { return 2 * column + 2; }
std::string variable_name(std::size_t var); // "z", "x+<i>", "x-<i>" with 1-based i

struct Binomial {
  std::string type; // "1a", "1b", "2", "3", "4"
  Exponent lead, trail;
};

// Degrevlex induced by z < x_{1+} < x_{1-} < ... : higher degree wins, otherwise the
// monomial with the larger exponent at the first differing variable is smaller.
bool monomial_less(const Exponent &a, const Exponent &b);

// Appends one column per antipodal pair of nonzero lattice points of P_A missing from [A | -A];
// zero and repeated columns are removed first.
IntegerMatrix saturate(const IntegerMatrix &a, const LatticeCountOptions &opts = {});

struct GroebnerOptions {
  long norm_bound = 4;
  bool allow_incomplete = false;
  std::uint64_t max_binomials = 2'000'000;
};

std::vector<Binomial> groebner_basis(const IntegerMatrix &a_sat, const GroebnerOptions &opts = {});

struct GBDiagnostics {
  bool squarefree_leads = true;
  std::vector<std::string> nonsquarefree_types;
  std::map<std::string, std::size_t> type_counts;
};

GBDiagnostics gb_diagnostics(const std::vector<Binomial> &gb);

// Obstruction for corank-1 matrices: even coefficient sum and an entry above 1.
bool rut_obstruction(const IntegerMatrix &a);

Exponent normal_form(Exponent m, const std::vector<Binomial> &gb);

// Both monomials map to the same point sum in the same degree.
bool binomial_in_ideal(const IntegerMatrix &a_sat, const Binomial &b);

struct DivisionTrials {
  std::size_t trials = 0;
  std::size_t failures = 0;
};

// Random fiber walks with the emitted moves; two monomials of one fiber must share a normal form.
DivisionTrials division_closure_trials(const IntegerMatrix &a_sat, const std::vector<Binomial> &gb,
                                       std::size_t trials, std::uint64_t seed, int max_degree = 6,
                                       int walk_length = 24);

struct FiberCheck {
  std::size_t monomials = 0;
  std::size_t fibers = 0;
  std::size_t bad_fibers = 0;
};

// Every monomial of the given degree; each fiber must have a single normal form.
FiberCheck exhaustive_fiber_check(const IntegerMatrix &a_sat, const std::vector<Binomial> &gb, int degree);

struct Triangulation {
  std::vector<std::vector<std::size_t>> cells; // variable indices
  std::vector<Integer> cell_volumes;           // normalized, in the lattice of aff(P)
  Integer total_volume = 0;
  Integer lattice_determinant = 1; // index of the lattice spanned by the lattice points
  bool all_unimodular = false;     // every cell has volume lattice_determinant
};

Triangulation triangulation_from_gb(const IntegerMatrix &a_sat, const std::vector<Binomial> &gb,
                                    std::uint64_t max_cells = 5'000'000);

} // namespace symtope
