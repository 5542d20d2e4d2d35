#include "symtope/polytope.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symtope {

namespace {

class Bits {
public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= 1ULL << (i % 64); }
  bool test(std::size_t i) const { return w_[i / 64] >> (i % 64) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_)
      c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  Bits operator&(const Bits &o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i)
      r.w_[i] &= o.w_[i];
    return r;
  }
  bool subset_of(const Bits &o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i])
        return false;
    return true;
  }

private:
  std::vector<std::uint64_t> w_;
};

struct Ray {
  IntVector x;
  Bits zero;
};

Integer dot_int(const IntVector &a, const IntVector &b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      s += a[i] * b[i];
  return s;
}

} // namespace

HullResult double_description(const std::vector<IntVector> &points, const HullOptions &opts) {
  const std::size_t N = points.size();
  if (N == 0)
    throw std::invalid_argument("double_description: no points");
  const std::size_t r = points[0].size();
  if (r > opts.max_dim)
    throw GuardExceeded("hull-size", "hull: dimension " + std::to_string(r) + " exceeds the guard");
  if (N > opts.max_vertices)
    throw GuardExceeded("hull-size", "hull: " + std::to_string(N) + " points exceed the guard");
  const std::size_t d = r + 1;
  std::vector<IntVector> rows(N, IntVector(d));
  for (std::size_t p = 0; p < N; ++p) {
    for (std::size_t i = 0; i < r; ++i)
      rows[p][i] = -points[p][i];
    rows[p][r] = 1;
  }

  std::vector<std::size_t> K;
  for (std::size_t p = 0; p < N && K.size() < d; ++p) {
    std::vector<std::size_t> trial = K;
    trial.push_back(p);
    IntegerMatrix m(trial.size(), d);
    for (std::size_t a = 0; a < trial.size(); ++a)
      for (std::size_t b = 0; b < d; ++b)
        m(a, b) = rows[trial[a]][b];
    if (rank(m) == trial.size())
      K = trial;
  }
  if (K.size() < d)
    throw std::domain_error("double_description: points are not full-dimensional");

  RationalMatrix AK(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      AK(a, b) = rows[K[a]][b];
  RationalMatrix inv = inverse(AK);
  std::vector<Ray> rays;
  for (std::size_t i = 0; i < d; ++i) {
    Ray ray{clear_denominators(inv.column(i)), Bits(N)};
    for (std::size_t j = 0; j < d; ++j)
      if (j != i)
        ray.zero.set(K[j]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> used(N, false);
  for (auto k : K)
    used[k] = true;
  for (std::size_t p = 0; p < N; ++p) {
    if (used[p])
      continue;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, zer, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot_int(rows[p], rays[i].x);
      int sg = sgn(s[i]);
      (sg > 0 ? pos : sg < 0 ? neg : zer).push_back(i);
    }
    std::vector<Ray> next;
    next.reserve(pos.size() + zer.size());
    for (auto i : pos)
      next.push_back(rays[i]);
    for (auto i : zer) {
      Ray ray = rays[i];
      ray.zero.set(p);
      next.push_back(std::move(ray));
    }
    for (auto i : pos)
      for (auto j : neg) {
        Bits common = rays[i].zero & rays[j].zero;
        if (common.count() + 2 < d)
          continue;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != i && t != j && common.subset_of(rays[t].zero))
            adjacent = false;
        if (!adjacent)
          continue;
        IntVector z(d);
        for (std::size_t c = 0; c < d; ++c)
          z[c] = s[i] * rays[j].x[c] - s[j] * rays[i].x[c];
        Ray ray{primitive(std::move(z)), common};
        ray.zero.set(p);
        next.push_back(std::move(ray));
        if (next.size() > opts.max_rays)
          throw GuardExceeded("hull-size", "hull: intermediate ray count exceeds the guard");
      }
    rays = std::move(next);
    used[p] = true;
  }

  HullResult res;
  for (const auto &ray : rays) {
    if (ray.x[r] <= 0)
      throw std::logic_error("double_description: origin is not interior");
    IntVector u(ray.x.begin(), ray.x.begin() + static_cast<long>(r));
    std::vector<std::size_t> inc;
    for (std::size_t p = 0; p < N; ++p)
      if (ray.zero.test(p))
        inc.push_back(p);
    res.normals.push_back(std::move(u));
    res.offsets.push_back(ray.x[r]);
    res.incidence.push_back(std::move(inc));
  }
  return res;
}

bool in_convex_hull(const std::vector<IntVector> &points, const IntVector &target) {
  // Phase I simplex with Bland's rule: sum lambda_i p_i = target, sum lambda_i = 1, lambda >= 0.
  const std::size_t k = points.size();
  if (k == 0)
    return false;
  const std::size_t r = target.size();
  const std::size_t m = r + 1;
  const std::size_t n = k + m;
  RationalMatrix T(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    Rational rhs = i < r ? Rational(target[i]) : Rational(1);
    int flip = rhs < 0 ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j)
      T(i, j) = flip * (i < r ? Rational(points[j][i]) : Rational(1));
    T(i, k + i) = 1;
    T(i, n) = flip * rhs;
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i)
    basis[i] = k + i;
  std::vector<Rational> z(n + 1, Rational(0));
  for (std::size_t j = 0; j <= n; ++j) {
    if (j >= k && j < n)
      continue;
    for (std::size_t i = 0; i < m; ++i)
      z[j] -= T(i, j);
  }
  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n)
      break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T(i, enter) <= 0)
        continue;
      Rational ratio = T(i, n) / T(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m)
      break; // unbounded cannot happen in phase I
    Rational piv = T(leave, enter);
    for (std::size_t j = 0; j <= n; ++j)
      T(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i)
      if (i != leave && T(i, enter) != 0)
        T.add_row(i, leave, Rational(-T(i, enter)));
    Rational f = z[enter];
    for (std::size_t j = 0; j <= n; ++j)
      z[j] -= f * T(leave, j);
    basis[leave] = enter;
  }
  return z[n] == 0;
}

} // namespace symtope
