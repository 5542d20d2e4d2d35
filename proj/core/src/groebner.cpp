#include "symtope/groebner.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace symtope {

std::string variable_name(std::size_t var) {
  if (var == 0)
    return "z";
  const std::size_t col = (var - 1) / 2 + 1;
  return (var % 2 == 1 ? "x+" : "x-") + std::to_string(col);
}

bool monomial_less(const Exponent &a, const Exponent &b) {
  long da = 0, db = 0;
  for (int x : a)
    da += x;
  for (int x : b)
    db += x;
  if (da != db)
    return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i])
      return a[i] > b[i];
  return false;
}

IntegerMatrix saturate(const IntegerMatrix &a, const LatticeCountOptions &opts) {
  std::vector<IntVector> cols;
  auto known = [&](const IntVector &x) {
    IntVector neg = x;
    for (auto &v : neg)
      v = -v;
    for (const auto &c : cols)
      if (c == x || c == neg)
        return true;
    return false;
  };
  for (std::size_t j = 0; j < a.cols(); ++j) {
    IntVector c = a.column(j);
    if (std::all_of(c.begin(), c.end(), [](const Integer &x) { return x == 0; }) || known(c))
      continue;
    cols.push_back(std::move(c));
  }
  CSPolytope p(a);
  // {-1,0,1} columns sharing at most one nonzero row: the origin is the only other lattice point
  if (p.vertices_certified_by_incidence())
    return IntegerMatrix::from_columns(a.rows(), cols);
  LatticeCount count = lattice_points(p, 1, opts);
  if (count.total == 2 * cols.size() + 1)
    return IntegerMatrix::from_columns(a.rows(), cols);
  std::vector<IntVector> extra;
  LatticeCountOptions single = opts;
  single.threads = 1;
  lattice_points(p, 1, single, [&](const std::vector<long> &y) {
    IntVector x = p.ambient_point(y);
    if (std::all_of(x.begin(), x.end(), [](const Integer &v) { return v == 0; }) || known(x))
      return;
    // one representative per antipodal pair: first nonzero entry positive
    auto first = std::find_if(x.begin(), x.end(), [](const Integer &v) { return v != 0; });
    if (*first < 0)
      return;
    extra.push_back(std::move(x));
  });
  std::sort(extra.begin(), extra.end());
  for (auto &x : extra)
    cols.push_back(std::move(x));
  return IntegerMatrix::from_columns(a.rows(), cols);
}

namespace {

struct Part {
  std::size_t column;
  int sign;
  int mult;
};

void for_each_submultiset(const std::vector<Part> &parts, int target, std::vector<int> &m, std::size_t i,
                          int remaining, const std::function<void(const std::vector<int> &)> &fn) {
  if (i == parts.size()) {
    if (remaining == 0)
      fn(m);
    return;
  }
  int rest = 0;
  for (std::size_t j = i + 1; j < parts.size(); ++j)
    rest += parts[j].mult;
  for (int c = std::max(0, remaining - rest); c <= std::min(parts[i].mult, remaining); ++c) {
    m[i] = c;
    for_each_submultiset(parts, target, m, i + 1, remaining - c, fn);
  }
  m[i] = 0;
}

std::size_t signed_var(std::size_t column, int sign) { return sign > 0 ? plus_var(column) : minus_var(column); }

} // namespace

std::vector<Binomial> groebner_basis(const IntegerMatrix &a_sat, const GroebnerOptions &opts) {
  const std::size_t s = a_sat.cols();
  const std::size_t nvars = 2 * s + 1;
  MinimalDependencies deps = minimal_dependencies(a_sat, opts.norm_bound);
  if (!deps.complete && !opts.allow_incomplete)
    throw std::domain_error("groebner_basis: minimal dependencies are not known to be complete");

  std::vector<Binomial> out;
  std::set<std::pair<Exponent, Exponent>> seen;
  auto emit = [&](std::string type, Exponent p, Exponent q) {
    if (p == q)
      return;
    if (monomial_less(p, q))
      std::swap(p, q);
    if (!seen.insert({p, q}).second)
      return;
    if (out.size() >= opts.max_binomials)
      throw GuardExceeded("max-binomials", "Groebner basis exceeds the binomial guard");
    out.push_back({std::move(type), std::move(p), std::move(q)});
  };

  for (const auto &dep : deps.dependencies) {
    std::vector<Part> parts;
    int n = 0;
    for (const auto &sc : dep.multiset()) {
      parts.push_back({sc.column, sc.sign, static_cast<int>(sc.multiplicity.get_si())});
      n += parts.back().mult;
    }
    const Part &lead_part = parts.front(); // min(a)
    auto monomials = [&](const std::vector<int> &m, int zpow) {
      Exponent p(nvars, 0), q(nvars, 0);
      q[0] = zpow;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        p[signed_var(parts[i].column, parts[i].sign)] += m[i];
        q[signed_var(parts[i].column, -parts[i].sign)] += parts[i].mult - m[i];
      }
      return std::make_pair(std::move(p), std::move(q));
    };
    std::vector<int> m(parts.size(), 0);
    if (n % 2 == 0) {
      const int k = n / 2;
      const std::string t1 = lead_part.sign > 0 ? "1a" : "1b";
      for_each_submultiset(parts, k, m, 0, k, [&](const std::vector<int> &mm) {
        if (lead_part.sign > 0 && mm[0] > 0)
          return;
        if (lead_part.sign < 0 && mm[0] == lead_part.mult)
          return;
        auto [p, q] = monomials(mm, 0);
        emit(t1, std::move(p), std::move(q));
      });
      if (lead_part.sign > 0)
        for_each_submultiset(parts, k + 1, m, 0, k + 1, [&](const std::vector<int> &mm) {
          if (mm[0] < 2)
            return;
          auto [p, q] = monomials(mm, 2);
          emit("3", std::move(p), std::move(q));
        });
    } else {
      const int k = (n - 1) / 2;
      for_each_submultiset(parts, k + 1, m, 0, k + 1, [&](const std::vector<int> &mm) {
        auto [p, q] = monomials(mm, 1);
        emit("2", std::move(p), std::move(q));
      });
    }
  }
  for (std::size_t l = 0; l < s; ++l) {
    Exponent p(nvars, 0), q(nvars, 0);
    p[plus_var(l)] = 1;
    p[minus_var(l)] = 1;
    q[0] = 2;
    emit("4", std::move(p), std::move(q));
  }
  return out;
}

GBDiagnostics gb_diagnostics(const std::vector<Binomial> &gb) {
  GBDiagnostics d;
  std::set<std::string> bad;
  for (const auto &b : gb) {
    ++d.type_counts[b.type];
    if (std::any_of(b.lead.begin(), b.lead.end(), [](int e) { return e > 1; })) {
      d.squarefree_leads = false;
      bad.insert(b.type);
    }
  }
  d.nonsquarefree_types.assign(bad.begin(), bad.end());
  return d;
}

bool rut_obstruction(const IntegerMatrix &a) {
  IntegerMatrix K = integer_kernel_basis(a);
  if (K.cols() != 1)
    throw std::domain_error("rut_obstruction: corank must be 1");
  Integer sum = 0;
  bool big = false;
  for (const auto &x : primitive(K.column(0))) {
    sum += abs(x);
    big = big || abs(x) > 1;
  }
  return big && sum % 2 == 0;
}

Exponent normal_form(Exponent m, const std::vector<Binomial> &gb) {
  for (;;) {
    const Binomial *hit = nullptr;
    for (const auto &b : gb) {
      bool divides = true;
      for (std::size_t i = 0; i < m.size() && divides; ++i)
        divides = b.lead[i] <= m[i];
      if (divides) {
        hit = &b;
        break;
      }
    }
    if (!hit)
      return m;
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] += hit->trail[i] - hit->lead[i];
  }
}

namespace {

std::pair<IntVector, long> evaluate(const IntegerMatrix &a, const Exponent &e) {
  IntVector sum(a.rows(), Integer(0));
  long deg = 0;
  for (std::size_t v = 0; v < e.size(); ++v) {
    deg += e[v];
    if (v == 0 || e[v] == 0)
      continue;
    const std::size_t col = (v - 1) / 2;
    const long coef = v % 2 == 1 ? e[v] : -e[v];
    for (std::size_t i = 0; i < a.rows(); ++i)
      sum[i] += a(i, col) * coef;
  }
  return {std::move(sum), deg};
}

bool divides(const Exponent &d, const Exponent &m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (d[i] > m[i])
      return false;
  return true;
}

} // namespace

bool binomial_in_ideal(const IntegerMatrix &a_sat, const Binomial &b) {
  return evaluate(a_sat, b.lead) == evaluate(a_sat, b.trail);
}

DivisionTrials division_closure_trials(const IntegerMatrix &a_sat, const std::vector<Binomial> &gb,
                                       std::size_t trials, std::uint64_t seed, int max_degree, int walk_length) {
  const std::size_t nvars = 2 * a_sat.cols() + 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree_dist(2, std::max(2, max_degree));
  std::uniform_int_distribution<std::size_t> var_dist(0, nvars - 1);
  DivisionTrials res;
  for (std::size_t t = 0; t < trials; ++t) {
    Exponent start(nvars, 0);
    const int deg = degree_dist(rng);
    for (int i = 0; i < deg; ++i)
      ++start[var_dist(rng)];
    Exponent cur = start;
    for (int step = 0; step < walk_length; ++step) {
      std::vector<std::pair<std::size_t, bool>> moves;
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (divides(gb[b].lead, cur))
          moves.emplace_back(b, true);
        if (divides(gb[b].trail, cur))
          moves.emplace_back(b, false);
      }
      if (moves.empty())
        break;
      auto [b, forward] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
      const Exponent &from = forward ? gb[b].lead : gb[b].trail;
      const Exponent &to = forward ? gb[b].trail : gb[b].lead;
      for (std::size_t i = 0; i < nvars; ++i)
        cur[i] += to[i] - from[i];
    }
    ++res.trials;
    if (normal_form(start, gb) != normal_form(cur, gb))
      ++res.failures;
  }
  return res;
}

FiberCheck exhaustive_fiber_check(const IntegerMatrix &a_sat, const std::vector<Binomial> &gb, int degree) {
  const std::size_t nvars = 2 * a_sat.cols() + 1;
  std::map<IntVector, Exponent> nf_of_fiber;
  std::set<IntVector> bad;
  FiberCheck fc;
  Exponent e(nvars, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == nvars) {
      e[v] = left;
      ++fc.monomials;
      IntVector key = evaluate(a_sat, e).first;
      Exponent nf = normal_form(e, gb);
      auto [it, fresh] = nf_of_fiber.emplace(key, nf);
      if (!fresh && it->second != nf)
        bad.insert(key);
      e[v] = 0;
      return;
    }
    for (int c = left; c >= 0; --c) {
      e[v] = c;
      rec(v + 1, left - c);
    }
    e[v] = 0;
  };
  rec(0, degree);
  fc.fibers = nf_of_fiber.size();
  fc.bad_fibers = bad.size();
  return fc;
}

Triangulation triangulation_from_gb(const IntegerMatrix &a_sat, const std::vector<Binomial> &gb,
                                    std::uint64_t max_cells) {
  const std::size_t nvars = 2 * a_sat.cols() + 1;
  if (nvars > 64)
    throw GuardExceeded("max-cells", "triangulation limited to 31 columns");
  CSPolytope p(a_sat);
  const std::size_t r = p.dimension();
  std::vector<IntVector> pts(nvars, IntVector(r, Integer(0)));
  for (std::size_t l = 0; l < a_sat.cols(); ++l) {
    pts[plus_var(l)] = p.lattice_coordinates_of(a_sat.column(l));
    for (std::size_t t = 0; t < r; ++t)
      pts[minus_var(l)][t] = -pts[plus_var(l)][t];
  }

  // radical of the initial ideal: squarefree supports of the leading terms
  std::vector<std::uint64_t> forbidden;
  for (const auto &b : gb) {
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < nvars; ++v)
      if (b.lead[v] > 0)
        mask |= std::uint64_t{1} << v;
    forbidden.push_back(mask);
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  auto blocked = [&](std::uint64_t set) {
    for (auto f : forbidden)
      if ((f & set) == f)
        return true;
    return false;
  };

  Triangulation tri;
  for (const auto &a : smith_normal_form(a_sat).divisors)
    tri.lattice_determinant *= a;

  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t v, std::uint64_t set) {
    if (v == nvars) {
      for (std::size_t u = 0; u < nvars; ++u)
        if (!(set >> u & 1) && !blocked(set | std::uint64_t{1} << u))
          return;
      std::vector<std::size_t> cell;
      for (std::size_t u = 0; u < nvars; ++u)
        if (set >> u & 1)
          cell.push_back(u);
      if (tri.cells.size() >= max_cells)
        throw GuardExceeded("max-cells", "triangulation exceeds --max-cells");
      tri.cells.push_back(std::move(cell));
      return;
    }
    const std::uint64_t with = set | std::uint64_t{1} << v;
    if (!blocked(with))
      rec(v + 1, with);
    rec(v + 1, set);
  };
  rec(0, 0);

  bool unimodular = true;
  for (const auto &cell : tri.cells) {
    if (cell.size() != r + 1)
      throw std::logic_error("triangulation_from_gb: cell is not a full-dimensional simplex");
    IntegerMatrix m(r + 1, r + 1);
    for (std::size_t i = 0; i <= r; ++i) {
      m(i, 0) = 1;
      for (std::size_t t = 0; t < r; ++t)
        m(i, t + 1) = pts[cell[i]][t];
    }
    Integer vol = abs(determinant(m));
    if (vol == 0)
      throw std::logic_error("triangulation_from_gb: degenerate cell");
    unimodular = unimodular && vol == tri.lattice_determinant;
    tri.total_volume += vol;
    tri.cell_volumes.push_back(std::move(vol));
  }
  tri.all_unimodular = unimodular;
  return tri;
}

} // namespace symtope
