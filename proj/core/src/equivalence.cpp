#include "symtope/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace symtope {

IntegerMatrix incidence_matrix(const Graph &g) {
  const auto &vs = g.vertices();
  IntegerMatrix m(vs.size(), g.edge_count());
  auto row = [&](int v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    m(row(u), e) = -1;
    m(row(v), e) = 1;
  }
  return m;
}

CSPolytope sep_of_graph(const Graph &g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("sep_of_graph: graph has no edges");
  return CSPolytope(incidence_matrix(g));
}

OrientationSigns orientation_signs(const SimplicialComplex &c) {
  ComplexProfile prof = classify(c);
  if (!prof.pseudomanifold || !prof.orientable.value_or(false))
    throw std::domain_error("orientation_signs: complex is not an orientable pseudomanifold");
  IntegerMatrix boundary;
  if (prof.closed) {
    boundary = boundary_map(c, c.dim());
  } else {
    SimplicialComplex bd = boundary_complex(c);
    boundary = boundary_map(c, c.dim(), &bd);
  }
  IntegerMatrix K = integer_kernel_basis(boundary);
  if (K.cols() != 1)
    throw std::logic_error("orientation_signs: kernel is not one-dimensional");
  OrientationSigns out;
  for (const auto &x : primitive(K.column(0))) {
    if (abs(x) != 1)
      throw std::logic_error("orientation_signs: kernel generator is not a sign vector");
    out.epsilon.push_back(x > 0 ? 1 : -1);
  }
  if (out.epsilon.front() < 0)
    for (auto &e : out.epsilon)
      e = -e;
  return out;
}

bool incidence_shaped(const SimplicialComplex &c, const OrientationSigns &signs) {
  IntegerMatrix boundary = boundary_map(c, c.dim());
  if (signs.epsilon.size() != boundary.cols())
    return false;
  for (std::size_t i = 0; i < boundary.rows(); ++i) {
    int plus = 0, minus = 0, other = 0;
    for (std::size_t j = 0; j < boundary.cols(); ++j) {
      Integer v = boundary(i, j) * signs.epsilon[j];
      if (v == 1)
        ++plus;
      else if (v == -1)
        ++minus;
      else if (v != 0)
        ++other;
    }
    const int nz = plus + minus + other;
    if (nz == 1)
      continue; // boundary ridge
    if (nz != 0 && (plus != 1 || minus != 1 || other != 0))
      return false;
  }
  return true;
}

Fingerprint fingerprint(const CSPolytope &p, const FingerprintOptions &opts) {
  Fingerprint f;
  f.dim = p.dimension();
  f.vertex_count = p.vertex_count();
  if (opts.facets) {
    try {
      f.facet_count = p.facets(opts.hull).size();
    } catch (const GuardExceeded &e) {
      f.skipped["facets"] = e.guard();
    }
  }
  if (opts.hstar) {
    try {
      EhrhartOptions eo;
      eo.counting = opts.counting;
      eo.counting.hull = opts.hull;
      f.hstar = ehrhart_hstar(p, eo);
      f.normalized_volume = f.hstar->normalized_volume();
    } catch (const GuardExceeded &e) {
      f.skipped["hstar"] = e.guard();
    }
  }
  if (opts.volume && !f.normalized_volume) {
    try {
      f.normalized_volume = normalized_volume_by_pulling(p, opts.hull);
    } catch (const GuardExceeded &e) {
      f.skipped["normalized_volume"] = e.guard();
    }
  }
  return f;
}

bool fingerprints_match(const Fingerprint &a, const Fingerprint &b) {
  if (a.dim != b.dim || a.vertex_count != b.vertex_count)
    return false;
  if (a.facet_count && b.facet_count && *a.facet_count != *b.facet_count)
    return false;
  if (a.normalized_volume && b.normalized_volume && *a.normalized_volume != *b.normalized_volume)
    return false;
  if (a.hstar && b.hstar && a.hstar->coefficients != b.hstar->coefficients)
    return false;
  return true;
}

std::string to_string(Which w) { return w == Which::Homology ? "homology" : "cohomology"; }

std::optional<int> cone_apex(const SimplicialComplex &c) {
  if (c.dim() != 2 || !c.is_pure())
    return std::nullopt;
  std::vector<int> common = c.facets().front();
  for (const auto &f : c.facets()) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(next));
    common = std::move(next);
  }
  if (common.empty())
    return std::nullopt;
  return common.front();
}

namespace {

ModelVerdict compare(const CSPolytope &actual, const CSPolytope &model, std::string route, std::string desc,
                     const FingerprintOptions &opts) {
  ModelVerdict v;
  v.route = std::move(route);
  v.model = std::move(desc);
  v.actual = fingerprint(actual, opts);
  v.predicted = fingerprint(model, opts);
  v.fingerprint_match = fingerprints_match(*v.actual, *v.predicted);
  return v;
}

CSPolytope actual_polytope(const SimplicialComplex &c, Which which) {
  return which == Which::Homology ? homology_polytope(c) : cohomology_polytope(c);
}

} // namespace

ModelVerdict model_polytope(const SimplicialComplex &c, Which which, const FingerprintOptions &opts) {
  if (c.dim() < 1)
    throw std::domain_error("model_polytope: no route for 0-dimensional complexes");
  ComplexProfile prof = classify(c);
  const long s = static_cast<long>(c.top_facets().size());
  if (prof.pseudomanifold && prof.orientable.value_or(false)) {
    if (prof.closed) {
      if (which == Which::Homology)
        return compare(actual_polytope(c, which), sep_of_graph(cycle_graph(static_cast<int>(s))), "closed-cycle-model",
                       "SEP(C_" + std::to_string(s) + ")", opts);
      return compare(actual_polytope(c, which), sep_of_graph(facet_ridge_graph(c)), "closed-dual-graph-model",
                     "SEP(G(Delta))", opts);
    }
    if (which == Which::Homology)
      return compare(actual_polytope(c, which), CSPolytope(IntegerMatrix::identity(static_cast<std::size_t>(s))),
                     "boundary-crosspolytope", std::to_string(s) + "-dimensional crosspolytope", opts);
    // incidence matrix of G plus one unit column per facet with a free ridge (projected whiskers)
    Graph g = facet_ridge_graph(c);
    IntegerMatrix inc = incidence_matrix(g);
    std::vector<IntVector> cols;
    for (std::size_t j = 0; j < inc.cols(); ++j)
      cols.push_back(inc.column(j));
    for (std::size_t f = 0; f < prof.free_ridge_count_per_facet.size(); ++f)
      if (prof.free_ridge_count_per_facet[f] > 0) {
        IntVector e(inc.rows(), Integer(0));
        e[f] = 1;
        cols.push_back(std::move(e));
      }
    return compare(actual_polytope(c, which), CSPolytope(IntegerMatrix::from_columns(inc.rows(), cols)),
                   "boundary-augmented-dual-graph", "pi_V(SEP(w(G,A)))", opts);
  }
  if (c.dim() == 1 && c.is_pure()) {
    Graph g = one_skeleton(c);
    if (which == Which::Homology)
      return compare(actual_polytope(c, which), sep_of_graph(g), "sep-definition", "SEP(G)", opts);
    if (g.connected() && g.vertex_count() >= 3)
      return compare(actual_polytope(c, which), sep_of_graph(cycle_graph(static_cast<int>(g.vertex_count()))),
                     "graph-cycle-model", "SEP(C_" + std::to_string(g.vertex_count()) + ")", opts);
  }
  if (which == Which::Cohomology && cone_apex(c)) {
    Graph h = one_skeleton(c);
    if (!is_planar(h, opts.max_minors)) {
      ModelVerdict v;
      v.route = "cone-planar-dual";
      v.model = "none: the 1-skeleton is not planar, so no symmetric edge polytope is unimodularly equivalent";
      v.actual = fingerprint(actual_polytope(c, which), opts);
      return v;
    }
    auto rot = find_planar_rotation(h);
    if (!rot)
      throw GuardExceeded("max-rotations", "model_polytope: planar rotation search exceeded its guard");
    return compare(actual_polytope(c, which), sep_of_graph(planar_dual(h, *rot)), "cone-planar-dual", "SEP(H*)", opts);
  }
  throw std::domain_error("model_polytope: no applicable model route");
}

namespace {

struct SmallGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> adj; // bitmask per vertex
};

SmallGraph small(const Graph &g) {
  if (g.vertex_count() > 32)
    throw GuardExceeded("graph-size", "graph too large for exhaustive search");
  SmallGraph s;
  s.n = g.vertex_count();
  s.adj.assign(s.n, 0);
  const auto &vs = g.vertices();
  auto idx = [&](int v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  for (auto [u, v] : g.edges()) {
    s.adj[idx(u)] |= 1u << idx(v);
    s.adj[idx(v)] |= 1u << idx(u);
  }
  return s;
}

bool connected_mask(const SmallGraph &g, std::uint32_t mask) {
  if (mask == 0)
    return false;
  std::uint32_t seen = mask & (~mask + 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < g.n; ++v)
      if (frontier >> v & 1)
        next |= g.adj[v];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

bool touching(const SmallGraph &g, std::uint32_t a, std::uint32_t b) {
  for (std::size_t v = 0; v < g.n; ++v)
    if ((a >> v & 1) && (g.adj[v] & b))
      return true;
  return false;
}

// Assigns every vertex to "unused" or one of at most k branch sets (restricted growth order).
bool search_minor(const SmallGraph &g, std::size_t k, std::uint64_t max_minors,
                  const std::function<bool(const std::vector<std::uint32_t> &)> &ok) {
  std::vector<std::uint32_t> blocks;
  std::uint64_t visited = 0;
  std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
    if (v == g.n) {
      if (blocks.size() != k)
        return false;
      if (++visited > max_minors)
        throw GuardExceeded("max-minors", "minor search exceeds --max-minors");
      for (auto b : blocks)
        if (!connected_mask(g, b))
          return false;
      return ok(blocks);
    }
    if (blocks.size() + (g.n - v) < k)
      return false;
    if (rec(v + 1))
      return true;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= 1u << v;
      if (rec(v + 1))
        return true;
      blocks[b] &= ~(1u << v);
    }
    if (blocks.size() < k) {
      blocks.push_back(1u << v);
      if (rec(v + 1))
        return true;
      blocks.pop_back();
    }
    return false;
  };
  return rec(0);
}

} // namespace

bool contains_minor_k5(const Graph &g, std::uint64_t max_minors) {
  SmallGraph s = small(g);
  return search_minor(s, 5, max_minors, [&](const std::vector<std::uint32_t> &b) {
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (!touching(s, b[i], b[j]))
          return false;
    return true;
  });
}

bool contains_minor_k33(const Graph &g, std::uint64_t max_minors) {
  SmallGraph s = small(g);
  return search_minor(s, 6, max_minors, [&](const std::vector<std::uint32_t> &b) {
    // block 0 on side one together with two of the remaining five
    for (std::size_t x = 1; x < 6; ++x)
      for (std::size_t y = x + 1; y < 6; ++y) {
        std::vector<std::size_t> left{0, x, y}, right;
        for (std::size_t z = 1; z < 6; ++z)
          if (z != x && z != y)
            right.push_back(z);
        bool all = true;
        for (auto l : left)
          for (auto r : right)
            all = all && touching(s, b[l], b[r]);
        if (all)
          return true;
      }
    return false;
  });
}

bool is_planar(const Graph &g, std::uint64_t max_minors) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  if (n <= 4 || m <= 8)
    return true;
  if (m > 3 * n - 6)
    return false;
  return !contains_minor_k5(g, max_minors) && !contains_minor_k33(g, max_minors);
}

namespace {

std::size_t count_faces(const Graph &g, const RotationSystem &rot,
                        std::vector<std::vector<std::pair<int, int>>> *faces = nullptr) {
  std::set<std::pair<int, int>> used;
  std::size_t count = 0;
  for (auto [a, b] : g.edges())
    for (auto start : {std::make_pair(a, b), std::make_pair(b, a)}) {
      if (used.count(start))
        continue;
      std::vector<std::pair<int, int>> face;
      auto dart = start;
      do {
        used.insert(dart);
        face.push_back(dart);
        const auto &order = rot.at(dart.second);
        auto it = std::find(order.begin(), order.end(), dart.first);
        ++it;
        if (it == order.end())
          it = order.begin();
        dart = {dart.second, *it};
      } while (dart != start);
      ++count;
      if (faces)
        faces->push_back(std::move(face));
    }
  return count;
}

} // namespace

std::optional<RotationSystem> find_planar_rotation(const Graph &g, std::uint64_t max_tries) {
  if (!g.connected())
    throw std::invalid_argument("find_planar_rotation: graph must be connected");
  const long target = 2 - static_cast<long>(g.vertex_count()) + static_cast<long>(g.edge_count());
  RotationSystem rot;
  std::vector<int> vs = g.vertices();
  for (int v : vs)
    rot[v] = g.neighbors(v);
  std::uint64_t tries = 0;
  // first neighbor fixed; permute the rest
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == vs.size()) {
      if (++tries > max_tries)
        throw GuardExceeded("max-rotations", "planar rotation search exceeded its guard");
      return static_cast<long>(count_faces(g, rot)) == target;
    }
    auto &order = rot[vs[i]];
    if (order.size() <= 2)
      return rec(i + 1);
    std::sort(order.begin() + 1, order.end());
    do {
      if (rec(i + 1))
        return true;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return false;
  };
  try {
    if (rec(0))
      return rot;
  } catch (const GuardExceeded &) {
    return std::nullopt;
  }
  return std::nullopt;
}

Graph planar_dual(const Graph &g, const RotationSystem &rotation) {
  if (!g.connected())
    throw std::invalid_argument("planar_dual: graph must be connected");
  for (int v : g.vertices()) {
    auto it = rotation.find(v);
    std::vector<int> nb = g.neighbors(v);
    if (it == rotation.end())
      throw std::invalid_argument("planar_dual: rotation system misses a vertex");
    std::vector<int> order = it->second;
    std::sort(order.begin(), order.end());
    if (order != nb)
      throw std::invalid_argument("planar_dual: rotation does not list the neighbors of a vertex");
  }
  std::vector<std::vector<std::pair<int, int>>> faces;
  const long f = static_cast<long>(count_faces(g, rotation, &faces));
  if (static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + f != 2)
    throw std::invalid_argument("planar_dual: rotation system is not a planar embedding");
  std::map<std::pair<int, int>, int> face_of;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (auto d : faces[i])
      face_of[d] = static_cast<int>(i + 1);
  std::vector<int> vs;
  for (long i = 1; i <= f; ++i)
    vs.push_back(static_cast<int>(i));
  std::set<std::pair<int, int>> es;
  for (auto [a, b] : g.edges()) {
    int x = face_of.at({a, b}), y = face_of.at({b, a});
    if (x == y)
      throw std::domain_error("planar_dual: dual has a loop (bridge in the graph)");
    if (!es.insert({std::min(x, y), std::max(x, y)}).second)
      throw std::domain_error("planar_dual: dual has parallel edges");
  }
  return Graph(vs, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

std::optional<std::vector<int>> graph_isomorphism(const Graph &a, const Graph &b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return std::nullopt;
  const std::size_t n = a.vertex_count();
  auto adjacency = [](const Graph &g) {
    std::vector<std::vector<bool>> m(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
    const auto &vs = g.vertices();
    auto idx = [&](int v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
    for (auto [u, v] : g.edges())
      m[idx(u)][idx(v)] = m[idx(v)][idx(u)] = true;
    return m;
  };
  auto A = adjacency(a), B = adjacency(b);
  std::vector<int> da(n), db(n);
  for (std::size_t i = 0; i < n; ++i) {
    da[i] = static_cast<int>(std::count(A[i].begin(), A[i].end(), true));
    db[i] = static_cast<int>(std::count(B[i].begin(), B[i].end(), true));
  }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb)
      return std::nullopt;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return da[x] > da[y]; });
  std::vector<long> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == n)
      return true;
    const std::size_t u = order[k];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || db[v] != da[u])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t w = order[j];
        ok = A[u][w] == B[v][static_cast<std::size_t>(map[w])];
      }
      if (!ok)
        continue;
      map[u] = static_cast<long>(v);
      used[v] = true;
      if (rec(k + 1))
        return true;
      used[v] = false;
      map[u] = -1;
    }
    return false;
  };
  if (!rec(0))
    return std::nullopt;
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = b.vertices()[static_cast<std::size_t>(map[i])];
  return out;
}

bool has_triangle(const Graph &g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(v, w))
        return true;
  return false;
}

bool shellable_sphere_equivalence(const SimplicialComplex &a, const SimplicialComplex &b) {
  if (a.top_facets().size() > 64 || b.top_facets().size() > 64)
    throw GuardExceeded("graph-size", "facet-ridge isomorphism limited to 64 facets");
  return graph_isomorphism(facet_ridge_graph(a), facet_ridge_graph(b)).has_value();
}

} // namespace symtope
