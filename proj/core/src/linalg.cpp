#include "symtope/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symtope {

namespace {

struct SNFWork {
  IntegerMatrix D, S, S_inv, T, T_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    D.swap_rows(i, j);
    S_inv.swap_rows(i, j);
    S.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
      return;
    D.swap_cols(i, j);
    T_inv.swap_cols(i, j);
    T.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const Integer &c) {
    D.add_row(dst, src, c);
    S_inv.add_row(dst, src, c);
    S.add_col(src, dst, -c);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer &c) {
    D.add_col(dst, src, c);
    T_inv.add_col(dst, src, c);
    T.add_row(src, dst, -c);
  }
  void negate_row(std::size_t r) {
    D.negate_row(r);
    S_inv.negate_row(r);
    S.negate_col(r);
  }
};

} // namespace

SNFResult smith_normal_form(const IntegerMatrix &a) {
  const std::size_t n = a.rows(), m = a.cols();
  SNFWork w{a, IntegerMatrix::identity(n), IntegerMatrix::identity(n), IntegerMatrix::identity(m),
            IntegerMatrix::identity(m)};
  IntegerMatrix &D = w.D;
  const std::size_t lim = std::min(n, m);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    std::size_t pi = n, pj = m;
    Integer best;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < m; ++j) {
        if (D(i, j) == 0)
          continue;
        Integer v = abs(D(i, j));
        if (pi == n || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi == n)
      break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (D(i, t) == 0)
          continue;
        Integer q = floor_div(D(i, t), D(t, t));
        w.add_row(i, t, -q);
        if (D(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (D(t, j) == 0)
          continue;
        Integer q = floor_div(D(t, j), D(t, t));
        w.add_col(j, t, -q);
        if (D(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot appeared; move it to the pivot slot
        Integer piv = abs(D(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < n; ++i)
          if (D(i, t) != 0 && abs(D(i, t)) < piv) {
            piv = abs(D(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < m; ++j)
          if (D(t, j) != 0 && abs(D(t, j)) < piv) {
            piv = abs(D(t, j));
            bi = t;
            bj = j;
          }
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < n && divisible; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (D(i, j) % D(t, t) != 0) {
            w.add_row(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible)
        break;
    }
    if (D(t, t) < 0)
      w.negate_row(t);
  }
  SNFResult r;
  for (std::size_t i = 0; i < t; ++i)
    r.divisors.push_back(D(i, i));
  r.D = std::move(w.D);
  r.S = std::move(w.S);
  r.S_inv = std::move(w.S_inv);
  r.T = std::move(w.T);
  r.T_inv = std::move(w.T_inv);
  return r;
}

std::size_t rank(const IntegerMatrix &input) {
  IntegerMatrix a = input;
  const std::size_t n = a.rows(), m = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a(i, c) == 0)
        continue;
      Integer f = a(i, c), g = a(r, c);
      Integer content = 0;
      for (std::size_t j = c; j < m; ++j) {
        a(i, j) = a(i, j) * g - a(r, j) * f;
        content = gcd(content, a(i, j));
      }
      if (content > 1)
        for (std::size_t j = c; j < m; ++j)
          a(i, j) /= content;
    }
    ++r;
  }
  return r;
}

std::size_t rank(const RationalMatrix &input) {
  RationalMatrix a = input;
  const std::size_t n = a.rows(), m = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < n; ++i)
      if (a(i, c) != 0)
        a.add_row(i, r, Rational(-a(i, c) / a(r, c)));
    ++r;
  }
  return r;
}

Integer determinant(const IntegerMatrix &input) {
  if (input.rows() != input.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0)
    return 1;
  IntegerMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix &a) {
  SNFResult snf = smith_normal_form(a);
  std::vector<std::size_t> cols;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j)
    cols.push_back(j);
  return snf.T_inv.select_columns(cols);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix &a) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c) == 0)
      ++p;
    if (p == n)
      continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < m; ++j)
      a(r, j) *= inv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && a(i, c) != 0)
        a.add_row(i, r, Rational(-a(i, c)));
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

RationalMatrix rational_kernel_basis(const RationalMatrix &input) {
  RationalMatrix a = input;
  std::vector<std::size_t> pivots = rref(a);
  const std::size_t m = a.cols();
  std::vector<bool> is_pivot(m, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Rational> v(m, Rational(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -a(k, f);
    basis.push_back(std::move(v));
  }
  return RationalMatrix::from_columns(m, basis);
}

std::optional<RatVector> solve_full_rank(const RationalMatrix &a, const RatVector &b) {
  const std::size_t n = a.rows(), m = a.cols();
  if (b.size() != n)
    throw std::invalid_argument("solve_full_rank: dimension mismatch");
  RationalMatrix aug(n, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      aug(i, j) = a(i, j);
    aug(i, m) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m)
    return std::nullopt;
  if (pivots.size() != m)
    throw std::invalid_argument("solve_full_rank: matrix does not have full column rank");
  RatVector x(m);
  for (std::size_t k = 0; k < m; ++k)
    x[pivots[k]] = aug(k, m);
  return x;
}

RationalMatrix inverse(const RationalMatrix &a) {
  const std::size_t n = a.rows();
  if (a.cols() != n)
    throw std::invalid_argument("inverse of a non-square matrix");
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1)
    throw std::domain_error("inverse of a singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<IntVector> solve_integral_system(const IntegerMatrix &a, const IntVector &b) {
  // A^T x = b with A = S D T  =>  D^T (S^T x) = (T^-1)^T b
  if (b.size() != a.cols())
    throw std::invalid_argument("solve_integral_system: b must have one entry per column of A");
  const std::size_t m = a.rows(), s = a.cols();
  SNFResult snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  IntVector c(s, Integer(0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k)
      c[i] += snf.T_inv(k, i) * b[k];
  IntVector y(m, Integer(0));
  for (std::size_t i = 0; i < s; ++i) {
    if (i < r) {
      if (c[i] % snf.divisors[i] != 0)
        return std::nullopt;
      y[i] = c[i] / snf.divisors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  IntVector x(m, Integer(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      x[i] += snf.S_inv(k, i) * y[k];
  IntegerMatrix at = a.transpose();
  if (at * x != b)
    throw std::logic_error("solve_integral_system: verification failed");
  return x;
}

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t r = lo + hi;
  if (r >= kPrime)
    r -= kPrime;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1)
      r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const Integer &z) { return mpz_fdiv_ui(z.get_mpz_t(), kPrime); }

// Rank mod p of the given columns; never larger than the rational rank.
std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>> &cols, const std::vector<std::size_t> &sel) {
  if (sel.empty())
    return 0;
  const std::size_t n = cols[sel[0]].size();
  std::vector<std::vector<std::uint64_t>> rows(sel.size());
  for (std::size_t k = 0; k < sel.size(); ++k)
    rows[k] = cols[sel[k]];
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0)
      ++p;
    if (p == rows.size())
      continue;
    std::swap(rows[r], rows[p]);
    std::uint64_t inv = powmod(rows[r][c], kPrime - 2);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0)
        continue;
      std::uint64_t f = mulmod(rows[i][c], inv);
      for (std::size_t j = c; j < n; ++j) {
        std::uint64_t sub = mulmod(f, rows[r][j]);
        rows[i][j] = rows[i][j] >= sub ? rows[i][j] - sub : rows[i][j] + kPrime - sub;
      }
    }
    ++r;
  }
  return r;
}

IntVector normalize_sign(IntVector v) {
  for (const auto &x : v)
    if (x != 0) {
      if (x < 0)
        for (auto &y : v)
          y = -y;
      break;
    }
  return v;
}

} // namespace

std::vector<Circuit> matroid_circuits(const IntegerMatrix &a, std::size_t max_cols) {
  const std::size_t m = a.cols();
  if (m > max_cols || m > 63)
    throw GuardExceeded("max-cols", "matroid_circuits: " + std::to_string(m) + " columns exceeds the guard");
  std::vector<std::vector<std::uint64_t>> cols(m, std::vector<std::uint64_t>(a.rows()));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      cols[j][i] = reduce(a(i, j));
  const std::size_t r = rank(a);
  std::vector<Circuit> out;
  std::vector<std::uint64_t> masks;
  std::vector<std::size_t> sel;
  for (std::size_t k = 1; k <= std::min(m, r + 1); ++k) {
    sel.resize(k);
    std::iota(sel.begin(), sel.end(), 0);
    for (;;) {
      std::uint64_t mask = 0;
      for (auto c : sel)
        mask |= 1ULL << c;
      bool contains = false;
      for (auto cm : masks)
        if ((cm & mask) == cm) {
          contains = true;
          break;
        }
      if (!contains && rank_mod_p(cols, sel) < k) {
        IntegerMatrix sub = a.select_columns(sel);
        if (rank(sub) < k) {
          RationalMatrix ker = rational_kernel_basis(to_rational(sub));
          IntVector v = normalize_sign(clear_denominators(ker.column(0)));
          IntVector full(m, Integer(0));
          for (std::size_t t = 0; t < k; ++t)
            full[sel[t]] = v[t];
          out.push_back({sel, full});
          masks.push_back(mask);
        }
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && sel[i - 1] == m - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++sel[i - 1];
      for (std::size_t j = i; j < k; ++j)
        sel[j] = sel[j - 1] + 1;
    }
  }
  return out;
}

std::vector<SignedColumn> MinimalDependency::multiset() const {
  std::vector<SignedColumn> out;
  for (std::size_t l = 0; l < a.size(); ++l)
    if (a[l] != 0)
      out.push_back({l, a[l] > 0 ? 1 : -1, abs(a[l])});
  return out;
}

Integer MinimalDependency::multiset_size() const {
  Integer s = 0;
  for (const auto &x : a)
    s += abs(x);
  return s;
}

MinimalDependencies minimal_dependencies(const IntegerMatrix &a, long norm_bound) {
  MinimalDependencies res;
  IntegerMatrix K = integer_kernel_basis(a);
  const std::size_t c = K.cols(), m = a.cols();
  res.corank = c;
  if (c == 0)
    return res;
  if (c == 1) {
    IntVector v = normalize_sign(primitive(K.column(0)));
    IntVector neg = v;
    for (auto &x : neg)
      x = -x;
    res.dependencies.push_back({v});
    res.dependencies.push_back({neg});
    return res;
  }
  // for a totally unimodular matrix the minimal dependencies are exactly the signed circuits
  bool tu = false;
  if (m <= 25) {
    try {
      tu = is_totally_unimodular(a, 2'000'000).totally_unimodular;
    } catch (const GuardExceeded &) {
    }
  }
  if (tu) {
    for (const auto &circ : matroid_circuits(a)) {
      IntVector neg = circ.vector;
      for (auto &x : neg)
        x = -x;
      res.dependencies.push_back({circ.vector});
      res.dependencies.push_back({neg});
    }
    std::sort(res.dependencies.begin(), res.dependencies.end(),
              [](const MinimalDependency &x, const MinimalDependency &y) { return x.a < y.a; });
    return res;
  }
  res.complete = false;
  if (norm_bound < 1)
    throw std::invalid_argument("minimal_dependencies: norm_bound must be positive");
  double count = 1;
  for (std::size_t i = 0; i < c; ++i)
    count *= static_cast<double>(2 * norm_bound + 1);
  if (count > 1e7)
    throw GuardExceeded("norm-bound", "minimal_dependencies: box search too large");

  // pivot rows of K that determine a kernel vector
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < m && piv.size() < c; ++i) {
    std::vector<std::size_t> trial = piv;
    trial.push_back(i);
    if (rank(K.select_rows(trial)) == trial.size())
      piv = trial;
  }
  RationalMatrix Kp_inv = inverse(to_rational(K.select_rows(piv)));
  RationalMatrix lift = to_rational(K) * Kp_inv; // m x c, maps pivot values to the kernel vector

  std::vector<IntVector> found;
  std::vector<long> t(c, -norm_bound);
  for (;;) {
    bool nonzero = std::any_of(t.begin(), t.end(), [](long x) { return x != 0; });
    if (nonzero) {
      RatVector tv;
      for (long x : t)
        tv.emplace_back(x);
      RatVector x = lift * tv;
      bool ok = true;
      IntVector xi;
      for (const auto &q : x) {
        if (!is_integral(q) || abs(q.get_num()) > norm_bound) {
          ok = false;
          break;
        }
        xi.push_back(q.get_num());
      }
      if (ok)
        found.push_back(std::move(xi));
    }
    std::size_t i = 0;
    while (i < c && t[i] == norm_bound)
      t[i++] = -norm_bound;
    if (i == c)
      break;
    ++t[i];
  }
  for (const auto &v : found) {
    bool minimal = true;
    for (const auto &w : found) {
      if (&w == &v || w == v)
        continue;
      bool below = true;
      for (std::size_t l = 0; l < m && below; ++l) {
        int sv = sgn(v[l]), sw = sgn(w[l]);
        if (sv != sw || abs(w[l]) > abs(v[l]))
          below = false;
      }
      if (below) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      res.dependencies.push_back({v});
  }
  std::sort(res.dependencies.begin(), res.dependencies.end(),
            [](const MinimalDependency &x, const MinimalDependency &y) { return x.a < y.a; });
  return res;
}

std::vector<TorsionVector> torsion_vectors(const SNFResult &snf) {
  std::vector<TorsionVector> out;
  const std::size_t s = snf.T_inv.rows();
  for (std::size_t i = 0; i < snf.rank(); ++i) {
    const Integer &alpha = snf.divisors[i];
    if (alpha == 1)
      continue;
    RatVector v(s);
    for (std::size_t k = 0; k < s; ++k) {
      v[k] = Rational(snf.T_inv(k, i), alpha);
      v[k].canonicalize();
    }
    out.push_back({std::move(v), alpha});
  }
  return out;
}

std::vector<TorsionVector> torsion_vectors(const IntegerMatrix &a) { return torsion_vectors(smith_normal_form(a)); }

} // namespace symtope
