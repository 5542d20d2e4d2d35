#include "symtope/polytope.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace symtope {

namespace {

bool incidence_condition(const IntegerMatrix &a) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::vector<std::size_t>> supp(m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (a(i, j) == 0)
        continue;
      if (abs(a(i, j)) != 1)
        return false;
      supp[j].push_back(i);
    }
  for (std::size_t j = 0; j < m; ++j) {
    // w = column j separates it strictly when its support has at least two rows
    if (supp[j].size() < 2)
      return false;
    for (std::size_t k = j + 1; k < m; ++k) {
      std::size_t common = 0;
      for (auto i : supp[j])
        if (a(i, k) != 0)
          ++common;
      if (common > 1)
        return false;
    }
  }
  return true;
}

// Column-style reduction so that the rows basis_rows form a lower-triangular block with
// positive diagonal (the identity whenever possible).
IntegerMatrix normalize_basis(IntegerMatrix B, std::vector<std::size_t> &basis_rows) {
  const std::size_t m = B.rows(), r = B.cols();
  std::vector<bool> chosen(m, false);
  basis_rows.clear();
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t best = m;
    Integer best_g;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i])
        continue;
      Integer g = 0;
      for (std::size_t c = t; c < r; ++c)
        g = gcd(g, B(i, c));
      if (g == 0)
        continue;
      if (best == m || g < best_g) {
        best = i;
        best_g = g;
      }
    }
    if (best == m)
      throw std::logic_error("normalize_basis: basis is rank deficient");
    const std::size_t i = best;
    for (;;) {
      std::size_t piv = r;
      for (std::size_t c = t; c < r; ++c)
        if (B(i, c) != 0 && (piv == r || abs(B(i, c)) < abs(B(i, piv))))
          piv = c;
      B.swap_cols(t, piv);
      bool done = true;
      for (std::size_t c = t + 1; c < r; ++c) {
        if (B(i, c) == 0)
          continue;
        B.add_col(c, t, Integer(-floor_div(B(i, c), B(i, t))));
        if (B(i, c) != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (B(i, t) < 0)
      B.negate_col(t);
    chosen[i] = true;
    basis_rows.push_back(i);
  }
  for (std::size_t t = 1; t < r; ++t)
    for (std::size_t u = 0; u < t; ++u) {
      Integer q = floor_div(B(basis_rows[t], u), B(basis_rows[t], t));
      if (q != 0)
        B.add_col(u, t, Integer(-q));
    }
  return B;
}

} // namespace

CSPolytope::CSPolytope(const IntegerMatrix &input) {
  const std::size_t m = input.rows();
  std::vector<IntVector> kept;
  source_.resize(input.cols());
  for (std::size_t j = 0; j < input.cols(); ++j) {
    IntVector c = input.column(j);
    bool zero = std::all_of(c.begin(), c.end(), [](const Integer &x) { return x == 0; });
    if (zero)
      continue;
    IntVector neg = c;
    for (auto &x : neg)
      x = -x;
    bool merged = false;
    for (std::size_t k = 0; k < kept.size() && !merged; ++k) {
      if (kept[k] == c) {
        source_[j] = std::make_pair(k, 1);
        merged = true;
      } else if (kept[k] == neg) {
        source_[j] = std::make_pair(k, -1);
        merged = true;
      }
    }
    if (!merged) {
      source_[j] = std::make_pair(kept.size(), 1);
      kept.push_back(std::move(c));
    }
  }
  if (kept.empty())
    throw std::invalid_argument("polytope_from_matrix: all-zero matrix");

  IntegerMatrix reduced = IntegerMatrix::from_columns(m, kept);
  incidence_certified_ = incidence_condition(reduced);
  if (!incidence_certified_) {
    // exact separation: drop columns lying in the hull of the remaining points
    std::vector<bool> vertex(kept.size(), true);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      std::vector<IntVector> others;
      for (std::size_t k = 0; k < kept.size(); ++k) {
        if (!vertex[k])
          continue;
        IntVector neg = kept[k];
        for (auto &x : neg)
          x = -x;
        if (k != j)
          others.push_back(kept[k]);
        others.push_back(std::move(neg));
      }
      if (in_convex_hull(others, kept[j]))
        vertex[j] = false;
    }
    std::vector<std::size_t> remap(kept.size(), kept.size());
    std::vector<IntVector> verts;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (vertex[k]) {
        remap[k] = verts.size();
        verts.push_back(kept[k]);
      } else {
        warnings_.push_back("column " + std::to_string(k + 1) + " of the reduced matrix is not a vertex; dropped");
      }
    for (auto &s : source_)
      if (s) {
        if (remap[s->first] == kept.size())
          s.reset();
        else
          s->first = remap[s->first];
      }
    reduced = IntegerMatrix::from_columns(m, verts);
  }
  A_ = std::move(reduced);

  snf_ = std::make_shared<SNFResult>(smith_normal_form(A_));
  dim_ = snf_->rank();
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < dim_; ++i)
    first.push_back(i);
  basis_ = normalize_basis(snf_->S.select_columns(first), basis_rows_);
  coords_ = IntegerMatrix(dim_, A_.cols());
  for (std::size_t j = 0; j < A_.cols(); ++j) {
    IntVector y = lattice_coordinates_of(A_.column(j));
    for (std::size_t t = 0; t < dim_; ++t)
      coords_(t, j) = y[t];
  }
}

IntVector CSPolytope::lattice_coordinates_of(const IntVector &x) const {
  const std::size_t r = dim_;
  IntVector y(r);
  for (std::size_t t = 0; t < r; ++t) {
    Integer v = x[basis_rows_[t]];
    for (std::size_t u = 0; u < t; ++u)
      v -= basis_(basis_rows_[t], u) * y[u];
    const Integer &g = basis_(basis_rows_[t], t);
    if (v % g != 0)
      throw std::domain_error("point is not in the lattice of aff(P)");
    y[t] = v / g;
  }
  if (basis_ * y != x)
    throw std::domain_error("point is not in the lattice of aff(P)");
  return y;
}

IntVector CSPolytope::ambient_point(const std::vector<long> &y) const {
  IntVector out(basis_.rows(), Integer(0));
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    for (std::size_t t = 0; t < y.size(); ++t)
      if (y[t] != 0)
        out[i] += basis_(i, t) * y[t];
  return out;
}

Integer CSPolytope::spanned_index() const {
  Integer p = 1;
  for (const auto &a : snf_->divisors)
    p *= a;
  return p;
}

IntVector CSPolytope::vertex_lattice_coordinates(int signed_index) const {
  std::size_t j = static_cast<std::size_t>(std::abs(signed_index) - 1);
  IntVector y = coords_.column(j);
  if (signed_index < 0)
    for (auto &x : y)
      x = -x;
  return y;
}

bool CSPolytope::facets_computed() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->facets.has_value();
}

const std::vector<Facet> &CSPolytope::facets(const HullOptions &opts) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (cache_->facets)
    return *cache_->facets;
  std::vector<IntVector> pts;
  for (std::size_t j = 0; j < A_.cols(); ++j) {
    pts.push_back(vertex_lattice_coordinates(static_cast<int>(j + 1)));
    pts.push_back(vertex_lattice_coordinates(-static_cast<int>(j + 1)));
  }
  HullResult h = double_description(pts, opts);
  RationalMatrix gram = to_rational(basis_.transpose() * basis_);
  RationalMatrix gram_inv = inverse(gram);
  std::vector<Facet> out;
  for (std::size_t f = 0; f < h.normals.size(); ++f) {
    Facet facet;
    for (const auto &u : h.normals[f]) {
      Rational q(u, h.offsets[f]);
      q.canonicalize();
      facet.lattice_normal.push_back(q);
    }
    RatVector c = gram_inv * facet.lattice_normal;
    facet.normal = mul(basis_, c);
    for (auto p : h.incidence[f]) {
      int j = static_cast<int>(p / 2 + 1);
      facet.vertex_indices.push_back(p % 2 == 0 ? j : -j);
    }
    std::sort(facet.vertex_indices.begin(), facet.vertex_indices.end());
    out.push_back(std::move(facet));
  }
  std::sort(out.begin(), out.end(),
            [](const Facet &a, const Facet &b) { return a.vertex_indices < b.vertex_indices; });
  cache_->facets = std::move(out);
  return *cache_->facets;
}

CSPolytope polytope_from_matrix(const IntegerMatrix &a) { return CSPolytope(a); }

IntegerMatrix top_boundary_map(const SimplicialComplex &c) {
  if (c.dim() < 1)
    throw std::invalid_argument("polytopes of 0-dimensional complexes are not defined");
  if (c.is_pure())
    return boundary_map(c, c.dim());
  SimplicialComplex pure = c.pure_part();
  return boundary_map(pure, pure.dim());
}

CSPolytope homology_polytope(const SimplicialComplex &c) {
  CSPolytope p(top_boundary_map(c));
  if (!c.is_pure())
    p.add_warning("complex is not pure; using its top-dimensional part");
  return p;
}

CSPolytope cohomology_polytope(const SimplicialComplex &c) {
  CSPolytope p(top_boundary_map(c).transpose());
  if (!c.is_pure())
    p.add_warning("complex is not pure; using its top-dimensional part");
  return p;
}

std::size_t dimension(const CSPolytope &p) { return p.dimension(); }
const IntegerMatrix &affine_hull_basis(const CSPolytope &p) { return p.lattice_basis(); }
const std::vector<Facet> &facets_hull(const CSPolytope &p, const HullOptions &opts) { return p.facets(opts); }

FacetLabeling facet_labeling(const CSPolytope &p, const Facet &facet) {
  FacetLabeling lab;
  lab.normal = facet.normal;
  const auto &src = p.source_map();
  for (std::size_t j = 0; j < src.size(); ++j) {
    Rational v = 0;
    if (src[j]) {
      IntVector y = p.vertex_lattice_coordinates(static_cast<int>(src[j]->first + 1));
      v = dot(facet.lattice_normal, y) * src[j]->second;
    }
    if (abs(v) == 1)
      lab.support.push_back(j);
    lab.ell.push_back(v);
  }
  return lab;
}

bool verify_spanning_forest(const IntegerMatrix &boundary, const FacetLabeling &labeling) {
  return rank(boundary.select_columns(labeling.support)) == rank(boundary);
}

bool verify_spanning_forest(const SimplicialComplex &c, const FacetLabeling &labeling) {
  return verify_spanning_forest(top_boundary_map(c), labeling);
}

Integer equal_weight_partition_count(const IntVector &multiset) {
  std::map<Integer, Integer> ways{{Integer(0), Integer(1)}};
  for (const auto &s : multiset) {
    std::map<Integer, Integer> next;
    for (const auto &[sum, w] : ways) {
      next[sum + s] += w;
      next[sum - s] += w;
    }
    ways = std::move(next);
  }
  auto it = ways.find(Integer(0));
  return it == ways.end() ? Integer(0) : it->second;
}

Integer facet_count_corank1(const IntVector &a) {
  if (gcd_of(a) != 1)
    throw std::invalid_argument("facet_count_corank1: dependency is not primitive");
  IntVector S;
  long zeros = 0;
  for (const auto &x : a) {
    if (x == 0)
      ++zeros;
    else
      S.push_back(abs(x));
  }
  Integer total = equal_weight_partition_count(S);
  for (std::size_t k = 0; k < S.size(); ++k) {
    IntVector rest;
    for (std::size_t i = 0; i < S.size(); ++i)
      if (i != k)
        rest.push_back(S[i]);
    total += equal_weight_partition_count(rest);
    for (Integer i = 1; i < S[k]; ++i) {
      IntVector with = rest;
      with.push_back(i);
      total += equal_weight_partition_count(with);
    }
  }
  // columns outside the support are coloops: the polytope is a free sum with a crosspolytope
  Integer factor;
  mpz_ui_pow_ui(factor.get_mpz_t(), 2, static_cast<unsigned long>(zeros));
  return total * factor;
}

bool is_crosspolytope(const CSPolytope &p) { return p.dimension() == p.column_count(); }

PolarVertex polar_vertex(const CSPolytope &, const Facet &facet) {
  return PolarVertex{facet.normal, facet.lattice_normal, all_integral(facet.lattice_normal)};
}

PolarVertex crosspolytope_polar_vertex(const CSPolytope &p, const std::vector<int> &signs) {
  if (!is_crosspolytope(p))
    throw std::invalid_argument("crosspolytope_polar_vertex: polytope is not a crosspolytope");
  if (signs.size() != p.column_count())
    throw std::invalid_argument("crosspolytope_polar_vertex: one sign per column required");
  RatVector b;
  for (int s : signs) {
    if (s != 1 && s != -1)
      throw std::invalid_argument("crosspolytope_polar_vertex: signs must be +1 or -1");
    b.emplace_back(s);
  }
  auto w = solve_full_rank(to_rational(p.lattice_coordinates().transpose()), b);
  PolarVertex pv;
  pv.lattice = *w;
  RationalMatrix gram = to_rational(p.lattice_basis().transpose() * p.lattice_basis());
  pv.ambient = mul(p.lattice_basis(), inverse(gram) * pv.lattice);
  pv.integral = all_integral(pv.lattice);
  return pv;
}

} // namespace symtope
