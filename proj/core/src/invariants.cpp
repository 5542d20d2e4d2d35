#include "symtope/invariants.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace symtope {

SpanningReport spanning_report(const IntegerMatrix &a) {
  SpanningReport r;
  r.alpha_max = smith_normal_form(a).largest_divisor();
  r.spanning = r.alpha_max == 1;
  r.idp_excluded = !r.spanning;
  return r;
}

std::string to_string(ReflexivityRoute route) {
  switch (route) {
  case ReflexivityRoute::AllDivisorsOne:
    return "all-divisors-one";
  case ReflexivityRoute::TorsionParity:
    return "torsion-parity";
  case ReflexivityRoute::TorsionAtLeast3:
    return "q>=3-torsion";
  case ReflexivityRoute::PolarIntegrality:
    return "polar-integrality";
  }
  return "unknown";
}

bool forall_sign_vectors_integral(const RatVector &v) {
  // b = 1 gives sum v in Z; flipping one sign changes the value by 2 v_i.
  Rational sum = 0;
  for (const auto &x : v) {
    if (!is_integral(Rational(2 * x)))
      return false;
    sum += x;
  }
  return is_integral(sum);
}

bool forall_sign_vectors_integral_exhaustive(const RatVector &v) {
  const std::size_t s = v.size();
  if (s > 24)
    throw std::invalid_argument("exhaustive sign enumeration limited to 24 entries");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    Rational t = 0;
    for (std::size_t i = 0; i < s; ++i)
      t += (mask >> i & 1) ? Rational(-v[i]) : v[i];
    if (!is_integral(t))
      return false;
  }
  return true;
}

ReflexivityVerdict reflexive_by_polar_vertices(const CSPolytope &p, const HullOptions &hull) {
  ReflexivityVerdict out;
  out.route = ReflexivityRoute::PolarIntegrality;
  out.reflexive = true;
  for (const auto &f : p.facets(hull))
    if (!all_integral(f.lattice_normal)) {
      out.reflexive = false;
      out.witness = f.lattice_normal;
      out.witness_kind = "polar-vertex";
      break;
    }
  return out;
}

namespace {

ReflexivityVerdict torsion_verdict(const SNFResult &snf) {
  ReflexivityVerdict out;
  if (snf.largest_divisor() == 1) {
    out.route = ReflexivityRoute::AllDivisorsOne;
    out.reflexive = true;
    return out;
  }
  out.route = snf.largest_divisor() > 2 ? ReflexivityRoute::TorsionAtLeast3 : ReflexivityRoute::TorsionParity;
  out.reflexive = true;
  for (auto &tv : torsion_vectors(snf))
    if (!forall_sign_vectors_integral(tv.v)) {
      out.reflexive = false;
      out.witness = std::move(tv.v);
      out.witness_kind = "torsion-vector";
      break;
    }
  return out;
}

} // namespace

ReflexivityVerdict is_reflexive(const CSPolytope &p, const HullOptions &hull) {
  if (is_crosspolytope(p))
    return torsion_verdict(p.snf());
  return reflexive_by_polar_vertices(p, hull);
}

bool crosspolytope_polar_vertices_integral(const CSPolytope &p, const Integer &scale) {
  if (!is_crosspolytope(p))
    throw std::invalid_argument("crosspolytope_polar_vertices_integral: not a crosspolytope");
  // w_b = M b with M = Y^{-T}; b = 1 - 2 sum_{i in S} e_i reduces the check to M 1 and 2 M e_i.
  RationalMatrix M = inverse(to_rational(p.lattice_coordinates().transpose()));
  const Rational q(scale);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      if (!is_integral(Rational(2 * q * M(i, j))))
        return false;
      row += M(i, j);
    }
    if (!is_integral(Rational(q * row)))
      return false;
  }
  return true;
}

ReflexivityVerdict reflexivity_by_topology(const SimplicialComplex &c) {
  if (c.dim() < 1)
    throw std::invalid_argument("reflexivity_by_topology: dimension must be positive");
  IntegerMatrix boundary = top_boundary_map(c);
  SNFResult snf = smith_normal_form(boundary);
  if (snf.rank() != boundary.cols())
    return is_reflexive(homology_polytope(c));
  const Integer alpha = snf.largest_divisor();
  if (alpha == 1 || alpha > 2)
    return torsion_verdict(snf);
  ReflexivityVerdict out;
  out.route = ReflexivityRoute::TorsionParity;
  if (c.dim() % 2 == 0) {
    out.reflexive = true;
    return out;
  }
  return torsion_verdict(snf);
}

ForestReport reflexivity_via_forests(const SimplicialComplex &c, std::uint64_t max_bases) {
  if (c.dim() < 1)
    throw std::invalid_argument("reflexivity_via_forests: dimension must be positive");
  SimplicialComplex pure = c.is_pure() ? c : c.pure_part();
  IntegerMatrix boundary = boundary_map(pure, pure.dim());
  const std::size_t s = boundary.cols();
  const std::size_t r = rank(boundary);
  if (binomial(s, r) > max_bases)
    throw GuardExceeded("max-bases", "spanning forest enumeration exceeds the basis guard");
  ForestReport rep;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i)
    idx[i] = i;
  bool all = true;
  for (;;) {
    if (rank(boundary.select_columns(idx)) == r) {
      ReflexivityVerdict v = reflexivity_by_topology(pure.subcomplex(idx));
      all = all && v.reflexive;
      rep.forests.push_back(idx);
      rep.verdicts.push_back(std::move(v));
    }
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == s - r + i - 1)
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  if (all)
    rep.reflexive = true;
  return rep;
}

bool dual_dilation_check(const CSPolytope &p, const HullOptions &hull) {
  const Integer alpha = p.snf().largest_divisor();
  if (is_crosspolytope(p))
    return crosspolytope_polar_vertices_integral(p, alpha);
  for (const auto &f : p.facets(hull))
    for (const auto &x : f.lattice_normal)
      if (!is_integral(Rational(alpha * x)))
        return false;
  return true;
}

Integer HStarVector::normalized_volume() const {
  Integer s = 0;
  for (const auto &x : coefficients)
    s += x;
  return s;
}

bool HStarVector::palindromic() const {
  const std::size_t n = coefficients.size();
  for (std::size_t i = 0; i < n; ++i)
    if (coefficients[i] != coefficients[n - 1 - i])
      return false;
  return true;
}

std::optional<IntVector> HStarVector::gamma() const {
  if (coefficients.empty() || !palindromic())
    return std::nullopt;
  const std::size_t d = coefficients.size() - 1;
  IntVector h = coefficients, g;
  for (std::size_t i = 0; 2 * i <= d; ++i) {
    Integer gi = h[i];
    g.push_back(gi);
    for (std::size_t j = 0; j <= d - 2 * i; ++j)
      h[i + j] -= gi * binomial(d - 2 * i, j);
  }
  for (const auto &x : h)
    if (x != 0)
      return std::nullopt;
  return g;
}

IntVector numerator_from_values(const std::vector<Integer> &values, std::size_t d) {
  IntVector h(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      Integer term = binomial(d + 1, i - j) * values[j];
      if ((i - j) % 2)
        acc -= term;
      else
        acc += term;
    }
    h[i] = acc;
  }
  return h;
}

Integer ehrhart_value(const HStarVector &h, long k) {
  const std::size_t d = h.coefficients.size() - 1;
  Integer e = 0;
  for (std::size_t i = 0; i <= d && static_cast<long>(i) <= k; ++i)
    e += h.coefficients[i] * binomial(static_cast<unsigned long>(k - static_cast<long>(i)) + d, d);
  return e;
}

HStarVector ehrhart_hstar(const CSPolytope &p, const EhrhartOptions &opts) {
  const std::size_t d = p.dimension();
  HStarVector out;
  if (opts.method == EhrhartMethod::Direct) {
    std::vector<Integer> E;
    for (std::size_t k = 0; k <= d; ++k)
      E.emplace_back(static_cast<unsigned long>(lattice_points(p, static_cast<long>(k), opts.counting).total));
    out.coefficients = numerator_from_values(E, d);
  } else {
    // h*_0..h*_K from E(0..K); h*_{K+1}..h*_d from interior counts via reciprocity.
    const std::size_t K = (d + 1) / 2;
    std::vector<Integer> E{Integer(1)}, Ei{Integer(0)};
    LatticeCountOptions o = opts.counting;
    o.count_interior = true;
    for (std::size_t k = 1; k <= K; ++k) {
      LatticeCount c = lattice_points(p, static_cast<long>(k), o);
      E.emplace_back(static_cast<unsigned long>(c.total));
      Ei.emplace_back(static_cast<unsigned long>(c.interior));
    }
    IntVector low = numerator_from_values(E, d);
    IntVector rec = numerator_from_values(Ei, d); // rec[j] = h*_{d+1-j}
    out.coefficients.assign(d + 1, Integer(0));
    for (std::size_t i = 0; i <= K; ++i)
      out.coefficients[i] = low[i];
    for (std::size_t j = 1; j + K <= d; ++j)
      out.coefficients[d + 1 - j] = rec[j];
  }
  if (out.coefficients[0] != 1)
    throw std::logic_error("ehrhart_hstar: h*_0 != 1");
  for (const auto &x : out.coefficients)
    if (x < 0)
      throw std::logic_error("ehrhart_hstar: negative coefficient");
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Open-addressing set of packed points; each key remembers the first stage it was reached.
class StagedSet {
public:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  StagedSet() : keys_(1024, kEmpty), stage_(1024, 0) {}

  bool insert(std::uint64_t key, std::uint8_t stage) {
    if (2 * (size_ + 1) > keys_.size())
      grow();
    std::size_t i = slot(key);
    if (keys_[i] == key)
      return false;
    keys_[i] = key;
    stage_[i] = stage;
    ++size_;
    return true;
  }

  std::optional<std::uint8_t> find(std::uint64_t key) const {
    std::size_t i = slot(key);
    if (keys_[i] == key)
      return stage_[i];
    return std::nullopt;
  }

  std::size_t size() const { return size_; }

private:
  std::size_t slot(std::uint64_t key) const {
    const std::size_t mask = keys_.size() - 1;
    std::size_t i = mix(key) & mask;
    while (keys_[i] != kEmpty && keys_[i] != key)
      i = (i + 1) & mask;
    return i;
  }

  void grow() {
    std::vector<std::uint64_t> old_keys(keys_.size() * 2, kEmpty);
    std::vector<std::uint8_t> old_stage(keys_.size() * 2, 0);
    old_keys.swap(keys_);
    old_stage.swap(stage_);
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != kEmpty) {
        std::size_t j = slot(old_keys[i]);
        keys_[j] = old_keys[i];
        stage_[j] = old_stage[i];
      }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> stage_;
  std::size_t size_ = 0;
};

struct Packing {
  std::vector<long> offset;
  std::vector<unsigned> shift;

  std::uint64_t pack(const std::vector<long> &y) const {
    std::uint64_t key = 0;
    for (std::size_t t = 0; t < y.size(); ++t)
      key |= static_cast<std::uint64_t>(y[t] + offset[t]) << shift[t];
    return key;
  }

  // Additive offset of a point: pack(y + g) = pack(y) + delta(g) while y + g stays in the box.
  std::uint64_t delta(const std::vector<long> &g) const {
    std::uint64_t key = 0;
    for (std::size_t t = 0; t < g.size(); ++t)
      key += static_cast<std::uint64_t>(g[t]) << shift[t];
    return key;
  }
};

struct Sumsets {
  std::vector<std::uint64_t> values;
  StagedSet set;
  Packing packing;
};

Sumsets build_sumsets(const CSPolytope &p, long k_max, const LatticeCountOptions &counting) {
  const std::size_t r = p.dimension();
  std::vector<std::vector<long>> points;
  lattice_points(p, 1, counting, [&](const std::vector<long> &y) { points.push_back(y); });
  std::sort(points.begin(), points.end());

  Sumsets out;
  out.packing.offset.assign(r, 0);
  out.packing.shift.assign(r, 0);
  unsigned used = 0;
  for (std::size_t t = 0; t < r; ++t) {
    long m = 0;
    for (const auto &y : points)
      m = std::max(m, std::labs(y[t]));
    const long half = m * std::max(k_max, 1L);
    const auto width = static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(2 * half + 1)));
    out.packing.offset[t] = half;
    out.packing.shift[t] = used;
    used += width;
  }
  if (used > 63)
    throw GuardExceeded("max-points", "sumset coordinates do not fit in 64 bits");
  if (k_max > 250)
    throw std::invalid_argument("hilbert_function: k_max too large");

  std::vector<std::uint64_t> gens;
  for (const auto &y : points) {
    bool origin = std::all_of(y.begin(), y.end(), [](long v) { return v == 0; });
    if (!origin)
      gens.push_back(out.packing.delta(y));
  }
  const std::uint64_t zero = out.packing.pack(std::vector<long>(r, 0));
  out.set.insert(zero, 0);
  out.values.push_back(1);
  std::vector<std::uint64_t> frontier{zero};
  for (long k = 1; k <= k_max; ++k) {
    std::vector<std::uint64_t> next;
    for (auto key : frontier)
      for (auto g : gens) {
        std::uint64_t n = key + g;
        if (out.set.insert(n, static_cast<std::uint8_t>(k)))
          next.push_back(n);
      }
    frontier = std::move(next);
    out.values.push_back(out.set.size());
  }
  return out;
}

long choose_k_max(const CSPolytope &p, const HStarVector &h, const HilbertOptions &opts, bool &truncated) {
  const long want = opts.k_max >= 0 ? opts.k_max : 2 * static_cast<long>(p.dimension());
  long k = 0;
  while (k < want && ehrhart_value(h, k + 1) <= opts.max_points)
    ++k;
  truncated = k < want;
  return k;
}

HilbertResult finish_hilbert(const Sumsets &s, std::size_t d, long k_max, bool truncated) {
  HilbertResult out;
  out.values = s.values;
  out.k_max = k_max;
  out.truncated = truncated;
  std::vector<Integer> v;
  for (auto x : s.values)
    v.emplace_back(static_cast<unsigned long>(x));
  out.numerator = numerator_from_values(v, d);
  for (std::size_t i = d + 1; i < out.numerator.size(); ++i)
    if (out.numerator[i] != 0)
      out.consistent = false;
  return out;
}

} // namespace

HilbertResult hilbert_function(const CSPolytope &p, const HilbertOptions &opts, const HStarVector *hstar) {
  HStarVector local;
  if (!hstar) {
    EhrhartOptions eo;
    eo.counting = opts.counting;
    local = ehrhart_hstar(p, eo);
    hstar = &local;
  }
  bool truncated = false;
  const long k_max = choose_k_max(p, *hstar, opts, truncated);
  Sumsets s = build_sumsets(p, k_max, opts.counting);
  return finish_hilbert(s, p.dimension(), k_max, truncated);
}

IDPReport idp_report(const CSPolytope &p, const IDPOptions &opts) {
  IDPReport rep;
  EhrhartOptions eo = opts.ehrhart;
  rep.hstar = ehrhart_hstar(p, eo);
  bool truncated = false;
  const long k_max = choose_k_max(p, rep.hstar, opts.hilbert, truncated);
  Sumsets s = build_sumsets(p, k_max, opts.hilbert.counting);
  HilbertResult hf = finish_hilbert(s, p.dimension(), k_max, truncated);
  rep.hilbert_numerator = hf.numerator;
  if (hf.consistent && rep.hilbert_numerator.size() > p.dimension() + 1)
    rep.hilbert_numerator.resize(p.dimension() + 1);
  rep.hilbert_values = hf.values;
  rep.truncated = truncated;
  for (long k = 0; k <= k_max; ++k)
    rep.ehrhart_values.push_back(ehrhart_value(rep.hstar, k).get_ui());
  rep.idp_up_to = k_max;
  for (long k = 0; k <= k_max; ++k) {
    if (rep.hilbert_values[static_cast<std::size_t>(k)] > rep.ehrhart_values[static_cast<std::size_t>(k)])
      throw std::logic_error("idp_report: Hilbert function exceeds Ehrhart function");
    if (rep.hilbert_values[static_cast<std::size_t>(k)] != rep.ehrhart_values[static_cast<std::size_t>(k)]) {
      rep.first_failure = k;
      rep.idp_up_to = k - 1;
      break;
    }
  }
  rep.idp = !rep.first_failure;
  if (rep.first_failure) {
    const long k = *rep.first_failure;
    LatticeCountOptions lo = opts.hilbert.counting;
    lo.threads = 1;
    lattice_points(p, k, lo, [&](const std::vector<long> &y) {
      auto stage = s.set.find(s.packing.pack(y));
      if (stage && *stage <= k)
        return;
      ++rep.witness_count;
      if (rep.witnesses.size() < opts.witness_cap)
        rep.witnesses.push_back(p.ambient_point(y));
    });
    const auto expected = rep.ehrhart_values[static_cast<std::size_t>(k)] - rep.hilbert_values[static_cast<std::size_t>(k)];
    if (rep.witness_count != expected)
      throw std::logic_error("idp_report: witness count disagrees with E(k) - HF(k)");
  }
  return rep;
}

namespace {

class Puller {
public:
  Puller(const CSPolytope &p, const HullOptions &hull, std::uint64_t max_cells) : max_cells_(max_cells) {
    const std::size_t n = p.column_count();
    for (std::size_t j = 0; j < n; ++j) {
      points_.push_back(p.vertex_lattice_coordinates(static_cast<int>(j + 1)));
      points_.push_back(p.vertex_lattice_coordinates(-static_cast<int>(j + 1)));
    }
    for (const auto &f : p.facets(hull)) {
      std::vector<std::size_t> v;
      for (int s : f.vertex_indices)
        v.push_back(s > 0 ? 2 * static_cast<std::size_t>(s - 1) : 2 * static_cast<std::size_t>(-s - 1) + 1);
      std::sort(v.begin(), v.end());
      facets_.push_back(std::move(v));
    }
    r_ = p.dimension();
  }

  Integer run() {
    for (const auto &f : facets_)
      pull(f, r_ - 1, {});
    return volume_;
  }

private:
  std::size_t linear_rank(const std::vector<std::size_t> &v) const {
    IntegerMatrix m(v.size(), r_);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t t = 0; t < r_; ++t)
        m(i, t) = points_[v[i]][t];
    return rank(m);
  }

  // Faces are subsets of facets of P, so their affine dimension is the linear rank minus one.
  void pull(const std::vector<std::size_t> &face, std::size_t e, std::vector<std::size_t> apexes) {
    if (face.size() == e + 1) {
      std::vector<std::size_t> cell = apexes;
      cell.insert(cell.end(), face.begin(), face.end());
      IntegerMatrix m(r_, r_);
      for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t t = 0; t < r_; ++t)
          m(i, t) = points_[cell[i]][t];
      volume_ += abs(determinant(m));
      if (++cells_ > max_cells_)
        throw GuardExceeded("max-cells", "pulling triangulation exceeds --max-cells");
      return;
    }
    const std::size_t v = face.front();
    std::set<std::vector<std::size_t>> sub;
    for (const auto &f : facets_) {
      std::vector<std::size_t> g;
      std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::back_inserter(g));
      if (g.size() < e || g.size() == face.size() || std::binary_search(g.begin(), g.end(), v))
        continue;
      if (linear_rank(g) == e)
        sub.insert(std::move(g));
    }
    apexes.push_back(v);
    for (const auto &g : sub)
      pull(g, e - 1, apexes);
  }

  std::vector<IntVector> points_;
  std::vector<std::vector<std::size_t>> facets_;
  std::size_t r_ = 0;
  std::uint64_t max_cells_;
  std::uint64_t cells_ = 0;
  Integer volume_ = 0;
};

} // namespace

Integer normalized_volume_by_pulling(const CSPolytope &p, const HullOptions &hull, std::uint64_t max_cells) {
  return Puller(p, hull, max_cells).run();
}

} // namespace symtope
