#pragma once

// Generated-input property suites, shared by the doctest runner and the acceptance binary.

#include "support.hpp"

#include "symtope/invariants.hpp"

#include <sstream>
#include <string>

namespace props {

using namespace symtope;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string &what) {
    ++cases;
    if (!ok && failures++ == 0)
      first_failure = what;
  }
  bool passed(std::size_t min_cases = 100) const { return failures == 0 && cases >= min_cases; }
};

inline std::string describe(const SimplicialComplex &c) {
  std::ostringstream out;
  for (const auto &f : c.facets()) {
    out << '[';
    for (int v : f)
      out << v;
    out << ']';
  }
  return out.str();
}

inline Outcome boundary_squared_zero(std::uint64_t seed, std::size_t n_cases = 150) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n_cases) {
    const int d = static_cast<int>(gen::uniform(rng, 1, 3));
    auto c = gen::random_complex(rng, static_cast<int>(gen::uniform(rng, d + 2, 7)), d, 0.4);
    bool ok = true;
    for (int j = 1; j < c.dim(); ++j)
      ok = ok && (boundary_map(c, j) * boundary_map(c, j + 1)).is_zero();
    out.record(ok, describe(c));
  }
  return out;
}

inline Outcome snf_round_trip(std::uint64_t seed, std::size_t n_cases = 200) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n_cases) {
    auto a = gen::random_matrix(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 7)),
                                static_cast<std::size_t>(gen::uniform(rng, 1, 7)), 5);
    if (gen::uniform(rng, 0, 3) == 0) // low-rank inputs
      a = a * gen::random_matrix(rng, a.cols(), a.cols(), 1);
    SNFResult s = smith_normal_form(a);
    bool ok = s.S * s.D * s.T == a && s.S * s.S_inv == IntegerMatrix::identity(a.rows()) &&
              s.T * s.T_inv == IntegerMatrix::identity(a.cols());
    for (std::size_t i = 0; ok && i < s.divisors.size(); ++i) {
      ok = s.divisors[i] > 0 && s.D(i, i) == s.divisors[i];
      if (ok && i + 1 < s.divisors.size())
        ok = s.divisors[i + 1] % s.divisors[i] == 0;
    }
    out.record(ok, "snf");
  }
  return out;
}

inline Outcome sign_vector_criterion(std::uint64_t seed, std::size_t n_cases = 300) {
  gen::Rng rng(seed);
  Outcome out;
  std::size_t positives = 0;
  while (out.cases < n_cases) {
    auto v = gen::random_rational_vector(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 16)));
    const bool expect = oracle::forall_b_exhaustive(v);
    positives += expect;
    out.record(forall_sign_vectors_integral(v) == expect, "sign vectors");
  }
  // both outcomes must be exercised
  out.record(positives > 10 && positives + 10 < n_cases, "degenerate generator");
  return out;
}

inline Outcome boundary_pseudomanifolds_acyclic(std::uint64_t seed, std::size_t n_cases = 120) {
  gen::Rng rng(seed);
  Outcome out;
  std::size_t attempts = 0;
  while (out.cases < n_cases && attempts < 50 * n_cases) {
    ++attempts;
    const int d = static_cast<int>(gen::uniform(rng, 1, 3));
    auto sphere = gen::random_sphere(rng, d, static_cast<int>(gen::uniform(rng, 0, 6)));
    const std::size_t s = sphere.top_facets().size();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < s; ++i)
      if (gen::uniform(rng, 0, 3) != 0)
        keep.push_back(i);
    if (keep.empty() || keep.size() == s)
      continue;
    auto c = sphere.subcomplex(keep);
    ComplexProfile p = classify(c);
    if (!p.pseudomanifold || p.closed)
      continue;
    out.record(homology(c, c.dim()).trivial(), describe(c));
  }
  return out;
}

inline Outcome dimension_and_orthogonality(std::uint64_t seed, std::size_t n_cases = 120) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n_cases) {
    const int d = static_cast<int>(gen::uniform(rng, 1, 3));
    auto c = gen::random_complex(rng, static_cast<int>(gen::uniform(rng, d + 2, 7)), d, 0.35);
    IntegerMatrix a = top_boundary_map(c);
    const long fd = static_cast<long>(c.top_facets().size());
    const long betti = homology(c, d).free_rank;
    CSPolytope p = homology_polytope(c);
    CSPolytope q = cohomology_polytope(c);
    bool ok = static_cast<long>(p.dimension()) == fd - betti && static_cast<long>(q.dimension()) == fd - betti;
    // the affine hull is orthogonal to the cocycles, and has complementary dimension
    IntegerMatrix cocycles = integer_kernel_basis(a.transpose());
    ok = ok && (cocycles.transpose() * p.lattice_basis()).is_zero();
    ok = ok && cocycles.cols() + p.dimension() == a.rows();
    out.record(ok, describe(c));
  }
  return out;
}

inline Outcome vertex_counts(std::uint64_t seed, std::size_t n_cases = 120) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n_cases) {
    const int d = static_cast<int>(gen::uniform(rng, 1, 3));
    auto c = gen::random_complex(rng, static_cast<int>(gen::uniform(rng, d + 2, 7)), d, 0.35);
    ComplexProfile prof = classify(c);
    long extra = 0;
    for (long free : prof.free_ridge_count_per_facet)
      extra += std::max(free - 1, 0L);
    const long ridges = static_cast<long>(c.faces(d - 1).size());
    bool ok = homology_polytope(c).vertex_count() == 2 * c.top_facets().size() &&
              static_cast<long>(cohomology_polytope(c).vertex_count()) == 2 * (ridges - extra);
    out.record(ok, describe(c));
  }
  return out;
}

// Reflexive lattice polytopes are exactly those with palindromic h* (checked where h* is cheap).
inline Outcome reflexive_iff_palindromic(std::uint64_t seed, std::size_t n_cases = 100) {
  gen::Rng rng(seed);
  Outcome out;
  while (out.cases < n_cases) {
    const int d = static_cast<int>(gen::uniform(rng, 1, 2));
    auto c = gen::random_complex(rng, static_cast<int>(gen::uniform(rng, d + 2, 6)), d, 0.3);
    auto p = gen::uniform(rng, 0, 1) ? homology_polytope(c) : cohomology_polytope(c);
    if (p.dimension() > 4 || p.dimension() == 0)
      continue;
    HStarVector h = ehrhart_hstar(p);
    out.record(is_reflexive(p).reflexive == h.palindromic(), describe(c));
  }
  return out;
}

} // namespace props
