#pragma once

// Test-only generators and brute-force oracles. Nothing here calls the
// library algorithm it is used to check.

#include "symtope/complex.hpp"
#include "symtope/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace symtope;

inline Integer det_laplace(const std::vector<std::vector<Integer>> &m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  if (n == 1)
    return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0)
      continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Integer term = m[0][c] * det_laplace(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t> &)> &f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

inline Integer minor_of(const IntegerMatrix &a, const std::vector<std::size_t> &rows,
                        const std::vector<std::size_t> &cols) {
  std::vector<std::vector<Integer>> m(rows.size(), std::vector<Integer>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m[i][j] = a(rows[i], cols[j]);
  return det_laplace(m);
}

// Elementary divisors as quotients of determinantal divisors (gcd of all k x k minors).
inline IntVector divisors_by_minors(const IntegerMatrix &a) {
  IntVector out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
    Integer g = 0;
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t> &rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t> &cols) {
        Integer d = minor_of(a, rows, cols);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0)
      break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline bool totally_unimodular_by_minors(const IntegerMatrix &a) {
  bool ok = true;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()) && ok; ++k)
    for_each_subset(a.rows(), k, [&](const std::vector<std::size_t> &rows) {
      for_each_subset(a.cols(), k, [&](const std::vector<std::size_t> &cols) {
        if (ok && abs(minor_of(a, rows, cols)) > 1)
          ok = false;
      });
    });
  return ok;
}

inline std::size_t rank_q(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && m[i][c] != 0) {
        Rational f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
          m[i][j] -= f * m[r][j];
      }
    ++r;
  }
  return r;
}

// w with w.p = 1 for the given full-dimensional points, or empty when they are dependent.
inline std::optional<std::vector<Rational>> hyperplane_through(const std::vector<std::vector<Rational>> &pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = pts[i][j];
    m[i][n] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0)
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != c && m[i][c] != 0) {
        Rational f = m[i][c] / m[c][c];
        for (std::size_t j = c; j <= n; ++j)
          m[i][j] -= f * m[c][j];
      }
  }
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i)
    w[i] = m[i][n] / m[i][i];
  return w;
}

// Facet normals (w.x <= 1) of conv(points) for full-dimensional, origin-centred point sets.
inline std::set<std::vector<Rational>> brute_facets(const std::vector<std::vector<Rational>> &points) {
  std::set<std::vector<Rational>> facets;
  if (points.empty())
    return facets;
  const std::size_t r = points[0].size();
  for_each_subset(points.size(), r, [&](const std::vector<std::size_t> &pick) {
    std::vector<std::vector<Rational>> sub;
    for (auto i : pick)
      sub.push_back(points[i]);
    auto w = hyperplane_through(sub);
    if (!w)
      return;
    for (const auto &q : points) {
      Rational s = 0;
      for (std::size_t j = 0; j < r; ++j)
        s += (*w)[j] * q[j];
      if (s > 1)
        return;
    }
    // the tight points must span a hyperplane, not a lower-dimensional face
    std::vector<std::vector<Rational>> tight;
    for (const auto &q : points) {
      Rational s = 0;
      for (std::size_t j = 0; j < r; ++j)
        s += (*w)[j] * q[j];
      if (s == 1) {
        auto row = q;
        row.push_back(1);
        tight.push_back(row);
      }
    }
    if (rank_q(tight) == r)
      facets.insert(*w);
  });
  return facets;
}

// +- lattice-coordinate columns of p as rationals.
inline std::vector<std::vector<Rational>> symmetric_points(const CSPolytope &p) {
  const auto &Y = p.lattice_coordinates();
  std::vector<std::vector<Rational>> pts;
  for (std::size_t j = 0; j < Y.cols(); ++j)
    for (int s : {1, -1}) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < Y.rows(); ++i)
        v.push_back(Rational(Y(i, j) * s));
      pts.push_back(v);
    }
  return pts;
}

// Lattice points of kP by box enumeration against brute-force facets.
inline std::pair<std::uint64_t, std::uint64_t> count_points(const CSPolytope &p, long k) {
  auto pts = symmetric_points(p);
  auto facets = brute_facets(pts);
  const std::size_t r = p.dimension();
  long m = 0;
  for (const auto &q : pts)
    for (const auto &x : q)
      m = std::max(m, static_cast<long>(Rational(abs(x)).get_d() + 0.5));
  std::vector<long> y(r, -m * k);
  std::uint64_t total = 0, interior = 0;
  while (true) {
    bool in = true, strict = true;
    for (const auto &w : facets) {
      Rational s = 0;
      for (std::size_t j = 0; j < r; ++j)
        s += w[j] * y[j];
      if (s > k) {
        in = false;
        break;
      }
      if (s == k)
        strict = false;
    }
    if (in) {
      ++total;
      if (strict)
        ++interior;
    }
    std::size_t t = 0;
    while (t < r && y[t] == m * k) {
      y[t] = -m * k;
      ++t;
    }
    if (t == r)
      break;
    ++y[t];
  }
  return {total, interior};
}

inline IntVector hstar_from_counts(const std::vector<std::uint64_t> &e, std::size_t d) {
  IntVector h(d + 1, Integer(0));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Integer term = binomial(d + 1, i - j) * Integer(static_cast<unsigned long>(e[j]));
      h[i] += ((i - j) % 2 == 0) ? term : Integer(-term);
    }
  return h;
}

inline bool forall_b_exhaustive(const RatVector &v) {
  const std::size_t s = v.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    Rational t = 0;
    for (std::size_t i = 0; i < s; ++i)
      t += (mask >> i & 1) ? v[i] : Rational(-v[i]);
    if (t.get_den() != 1)
      return false;
  }
  return true;
}

} // namespace oracle

namespace gen {

using namespace symtope;
using Rng = std::mt19937_64;

inline long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntegerMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols, long range) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = uniform(rng, -range, range);
  return m;
}

// Pure d-complex on at most n vertices with a random nonempty set of d-faces.
inline SimplicialComplex random_complex(Rng &rng, int n, int d, double density) {
  std::vector<Face> all;
  Face cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == d + 1) {
      all.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  std::vector<Face> pick;
  std::bernoulli_distribution keep(density);
  for (const auto &f : all)
    if (keep(rng))
      pick.push_back(f);
  if (pick.empty())
    pick.push_back(all[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(all.size()) - 1))]);
  return build_complex(pick);
}

// Random stellar subdivisions of a closed sphere.
inline SimplicialComplex random_sphere(Rng &rng, int d, int subdivisions) {
  std::vector<Face> facets;
  for (int skip = 1; skip <= d + 2; ++skip) {
    Face f;
    for (int v = 1; v <= d + 2; ++v)
      if (v != skip)
        f.push_back(v);
    facets.push_back(f);
  }
  SimplicialComplex c = build_complex(facets);
  for (int i = 0; i < subdivisions; ++i) {
    const auto &top = c.top_facets();
    Face f = top[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(top.size()) - 1))];
    c = stellar_subdivide(c, f);
  }
  return c;
}

inline RatVector random_rational_vector(Rng &rng, std::size_t s) {
  static const long dens[] = {1, 2, 2, 2, 3, 4};
  RatVector v;
  const bool halves = uniform(rng, 0, 1) == 0;
  for (std::size_t i = 0; i < s; ++i) {
    long den = halves ? 2 : dens[uniform(rng, 0, 5)];
    Rational q(uniform(rng, -3 * den, 3 * den), den);
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

} // namespace gen
