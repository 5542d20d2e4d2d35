#pragma once

#include "symtope/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace symtope {

// A = S * D * T with S, T unimodular. S_inv and T_inv are kept because the
// torsion representatives and the integral solver need them directly.
struct SNFResult {
  IntVector divisors; // nonzero diagonal entries, positive, divisibility chain
  IntegerMatrix D;
  IntegerMatrix S, T;
  IntegerMatrix S_inv, T_inv;

  std::size_t rank() const { return divisors.size(); }
  Integer largest_divisor() const { return divisors.empty() ? Integer(1) : divisors.back(); }
};

SNFResult smith_normal_form(const IntegerMatrix &a);

std::size_t rank(const IntegerMatrix &a);
std::size_t rank(const RationalMatrix &a);
Integer determinant(const IntegerMatrix &a);

// Columns form a Z-basis of ker_Z(a).
IntegerMatrix integer_kernel_basis(const IntegerMatrix &a);

// Columns form a Q-basis of ker(a) in reduced echelon form.
RationalMatrix rational_kernel_basis(const RationalMatrix &a);

// Unique solution x of a x = b for a of full column rank, or nullopt when inconsistent.
std::optional<RatVector> solve_full_rank(const RationalMatrix &a, const RatVector &b);

// Inverse of a square nonsingular rational matrix.
RationalMatrix inverse(const RationalMatrix &a);

// Integral solution of A^T x = b, verified by multiplication.
std::optional<IntVector> solve_integral_system(const IntegerMatrix &a, const IntVector &b);

struct TUResult {
  bool totally_unimodular = true;
  std::vector<std::size_t> rows, cols; // minimal-size witness when not TU
  Integer determinant = 0;
  std::uint64_t minors_examined = 0;
};

// Number of square submatrices, sum_k C(n,k) C(m,k) = C(n+m, n) - 1.
Integer predicted_minor_count(std::size_t rows, std::size_t cols);

TUResult is_totally_unimodular(const IntegerMatrix &a, std::uint64_t max_minors = 100'000'000);

struct Circuit {
  std::vector<std::size_t> support;
  IntVector vector; // primitive, first nonzero entry positive
};

std::vector<Circuit> matroid_circuits(const IntegerMatrix &a, std::size_t max_cols = 25);

struct SignedColumn {
  std::size_t column;
  int sign;
  Integer multiplicity;
};

struct MinimalDependency {
  IntVector a;
  std::vector<SignedColumn> multiset() const;
  Integer multiset_size() const;
};

struct MinimalDependencies {
  std::vector<MinimalDependency> dependencies;
  bool complete = true;
  std::size_t corank = 0;
};

MinimalDependencies minimal_dependencies(const IntegerMatrix &a, long norm_bound = 4);

struct TorsionVector {
  RatVector v;
  Integer order;
};

std::vector<TorsionVector> torsion_vectors(const IntegerMatrix &a);
std::vector<TorsionVector> torsion_vectors(const SNFResult &snf);

} // namespace symtope
