#include "symtope/complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace symtope {

namespace {

bool is_subset(const Face &a, const Face &b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<Face> facets, std::string name) : name_(std::move(name)) {
  for (auto &f : facets) {
    if (f.empty())
      throw std::invalid_argument("empty facet");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v <= 0)
        throw std::invalid_argument("vertex labels must be positive integers, got " + std::to_string(v));
  }
  std::sort(facets.begin(), facets.end(), [](const Face &a, const Face &b) {
    if (a.size() != b.size())
      return a.size() > b.size();
    return a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto &f : facets) {
    bool dominated = false;
    for (const auto &g : facets_)
      if (g.size() > f.size() && is_subset(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated)
      facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());

  std::vector<std::set<Face>> by_dim;
  for (const auto &f : facets_) {
    const std::size_t k = f.size();
    if (by_dim.size() < k)
      by_dim.resize(k);
    for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
      Face sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1)
          sub.push_back(f[i]);
      by_dim[sub.size() - 1].insert(std::move(sub));
    }
  }
  for (auto &s : by_dim)
    faces_.emplace_back(s.begin(), s.end());
  if (!faces_.empty())
    for (const auto &v : faces_[0])
      vertices_.push_back(v[0]);
}

const std::vector<Face> &SimplicialComplex::faces(int j) const {
  static const std::vector<Face> none;
  if (j < 0 || j >= static_cast<int>(faces_.size()))
    return none;
  return faces_[static_cast<std::size_t>(j)];
}

std::optional<std::size_t> SimplicialComplex::find_face(const Face &f) const {
  const auto &list = faces(static_cast<int>(f.size()) - 1);
  auto it = std::lower_bound(list.begin(), list.end(), f);
  if (it == list.end() || *it != f)
    return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f;
  for (const auto &l : faces_)
    f.push_back(static_cast<long>(l.size()));
  return f;
}

bool SimplicialComplex::is_pure() const {
  for (const auto &f : facets_)
    if (static_cast<int>(f.size()) != dim() + 1)
      return false;
  return true;
}

SimplicialComplex SimplicialComplex::pure_part() const { return SimplicialComplex(top_facets(), name_); }

SimplicialComplex SimplicialComplex::subcomplex(const std::vector<std::size_t> &idx) const {
  std::vector<Face> fs;
  for (auto i : idx)
    fs.push_back(top_facets().at(i));
  if (fs.empty())
    return SimplicialComplex();
  return SimplicialComplex(fs);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex &other) const {
  for (const auto &f : facets_)
    if (!other.contains(f))
      return false;
  return true;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>> &facet_list, std::string name) {
  if (facet_list.empty())
    throw std::invalid_argument("a complex needs at least one facet");
  return SimplicialComplex(facet_list, std::move(name));
}

Graph::Graph(std::vector<int> vertices, const std::vector<std::pair<int, int>> &edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  vertices_ = std::move(vertices);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("graph loops are not allowed");
    if (u > v)
      std::swap(u, v);
    if (!std::binary_search(vertices_.begin(), vertices_.end(), u) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), v))
      throw std::invalid_argument("edge endpoint is not a vertex");
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("graph multi-edges are not allowed");
  }
  edges_.assign(seen.begin(), seen.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u > v)
    std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges_) {
    if (a == v)
      out.push_back(b);
    else if (b == v)
      out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::connected() const {
  if (vertices_.empty())
    return true;
  std::set<int> seen{vertices_[0]};
  std::queue<int> q;
  q.push(vertices_[0]);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : neighbors(v))
      if (seen.insert(w).second)
        q.push(w);
  }
  return seen.size() == vertices_.size();
}

Graph cycle_graph(int n) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(i);
    es.push_back({i, i % n + 1});
  }
  return Graph(vs, es);
}

Graph path_graph(int n) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(i);
    if (i < n)
      es.push_back({i, i + 1});
  }
  return Graph(vs, es);
}

Graph complete_graph(int n) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(i);
    for (int j = i + 1; j <= n; ++j)
      es.push_back({i, j});
  }
  return Graph(vs, es);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<int> vs;
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= a + b; ++i)
    vs.push_back(i);
  for (int i = 1; i <= a; ++i)
    for (int j = a + 1; j <= a + b; ++j)
      es.push_back({i, j});
  return Graph(vs, es);
}

SimplicialComplex graph_complex(const Graph &g, std::string name) {
  std::vector<Face> fs;
  std::set<int> covered;
  for (auto [u, v] : g.edges()) {
    fs.push_back({u, v});
    covered.insert(u);
    covered.insert(v);
  }
  for (int v : g.vertices())
    if (!covered.count(v))
      fs.push_back({v});
  if (fs.empty())
    throw std::invalid_argument("empty graph");
  return SimplicialComplex(fs, std::move(name));
}

Graph one_skeleton(const SimplicialComplex &c) {
  std::vector<std::pair<int, int>> es;
  for (const auto &e : c.faces(1))
    es.push_back({e[0], e[1]});
  return Graph(c.vertices(), es);
}

std::string to_string(const HomologyGroup &h) {
  std::string s;
  if (h.free_rank > 0)
    s = h.free_rank == 1 ? "Z" : "Z^" + std::to_string(h.free_rank);
  for (const auto &q : h.torsion)
    s += (s.empty() ? "" : " + ") + ("Z_" + q.get_str());
  return s.empty() ? "0" : s;
}

IntegerMatrix boundary_map(const SimplicialComplex &c, int j, const SimplicialComplex *relative_to) {
  if (j < 0 || j > c.dim())
    throw std::out_of_range("boundary_map: degree " + std::to_string(j) + " out of range");
  if (relative_to && !relative_to->is_subcomplex_of(c))
    throw std::invalid_argument("boundary_map: relative_to is not a subcomplex");
  auto keep = [&](const Face &f) { return !relative_to || !relative_to->contains(f); };

  std::vector<std::size_t> row_pos;
  std::vector<long> row_index;
  const auto &lower = c.faces(j - 1);
  row_index.assign(lower.size(), -1);
  std::size_t nrows = 0;
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (keep(lower[i]))
      row_index[i] = static_cast<long>(nrows++);
  std::vector<const Face *> cols;
  for (const auto &f : c.faces(j))
    if (keep(f))
      cols.push_back(&f);

  IntegerMatrix m(nrows, cols.size());
  if (j == 0)
    return m;
  for (std::size_t col = 0; col < cols.size(); ++col) {
    const Face &f = *cols[col];
    for (std::size_t t = 0; t < f.size(); ++t) {
      Face sub;
      for (std::size_t u = 0; u < f.size(); ++u)
        if (u != t)
          sub.push_back(f[u]);
      std::size_t idx = *c.find_face(sub);
      if (row_index[idx] >= 0)
        m(static_cast<std::size_t>(row_index[idx]), col) = (t % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

namespace {

HomologyGroup homology_from_maps(const IntegerMatrix &dj, std::size_t n_faces, const IntegerMatrix &dj1) {
  HomologyGroup h;
  std::size_t rj = dj.empty() ? 0 : rank(dj);
  h.free_rank = static_cast<long>(n_faces - rj);
  if (!dj1.empty()) {
    SNFResult snf = smith_normal_form(dj1);
    h.free_rank -= static_cast<long>(snf.rank());
    for (const auto &a : snf.divisors)
      if (a > 1)
        h.torsion.push_back(a);
  }
  return h;
}

} // namespace

HomologyGroup homology(const SimplicialComplex &c, int j) {
  if (j < 0 || j > c.dim())
    throw std::out_of_range("homology: degree " + std::to_string(j) + " out of range");
  IntegerMatrix dj = boundary_map(c, j);
  IntegerMatrix dj1 = j + 1 <= c.dim() ? boundary_map(c, j + 1) : IntegerMatrix(c.faces(j).size(), 0);
  return homology_from_maps(dj, c.faces(j).size(), dj1);
}

HomologyGroup relative_homology(const SimplicialComplex &c, const SimplicialComplex &sub, int j) {
  if (j < 0 || j > c.dim())
    throw std::out_of_range("relative_homology: degree out of range");
  IntegerMatrix dj = boundary_map(c, j, &sub);
  IntegerMatrix dj1 = j + 1 <= c.dim() ? boundary_map(c, j + 1, &sub) : IntegerMatrix(dj.cols(), 0);
  return homology_from_maps(dj, dj.cols(), dj1);
}

namespace {

// For each ridge of the top facets, the indices of top facets containing it.
std::vector<std::vector<std::size_t>> ridge_incidence(const SimplicialComplex &c) {
  const int d = c.dim();
  std::vector<std::vector<std::size_t>> inc(c.faces(d - 1).size());
  const auto &top = c.top_facets();
  for (std::size_t k = 0; k < top.size(); ++k) {
    const Face &f = top[k];
    for (std::size_t t = 0; t < f.size(); ++t) {
      Face sub;
      for (std::size_t u = 0; u < f.size(); ++u)
        if (u != t)
          sub.push_back(f[u]);
      inc[*c.find_face(sub)].push_back(k);
    }
  }
  return inc;
}

} // namespace

SimplicialComplex boundary_complex(const SimplicialComplex &c) {
  if (c.dim() < 1)
    return SimplicialComplex();
  auto inc = ridge_incidence(c);
  std::vector<Face> fs;
  for (std::size_t r = 0; r < inc.size(); ++r)
    if (inc[r].size() == 1)
      fs.push_back(c.faces(c.dim() - 1)[r]);
  if (fs.empty())
    return SimplicialComplex();
  return SimplicialComplex(fs);
}

ComplexProfile classify(const SimplicialComplex &c) {
  ComplexProfile p;
  p.dim = c.dim();
  p.f_vector = c.f_vector();
  p.pure = c.is_pure();
  if (c.dim() < 1) {
    p.strongly_connected = c.facets().size() <= 1;
    return p;
  }
  const auto &top = c.top_facets();
  auto inc = ridge_incidence(c);
  bool at_most_two = true;
  p.free_ridge_count_per_facet.assign(top.size(), 0);
  for (std::size_t r = 0; r < inc.size(); ++r) {
    if (inc[r].size() > 2)
      at_most_two = false;
    if (inc[r].size() == 1) {
      p.boundary_ridges.push_back(r);
      ++p.free_ridge_count_per_facet[inc[r][0]];
    }
  }
  // strong connectivity: facet-ridge graph of the top facets is connected and covers all facets
  std::vector<std::vector<std::size_t>> adj(top.size());
  for (const auto &list : inc)
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = a + 1; b < list.size(); ++b) {
        adj[list[a]].push_back(list[b]);
        adj[list[b]].push_back(list[a]);
      }
  std::vector<bool> seen(top.size(), false);
  std::queue<std::size_t> q;
  seen[0] = true;
  q.push(0);
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  p.strongly_connected = p.pure && count == top.size();
  p.pseudomanifold = p.pure && p.strongly_connected && at_most_two;
  p.closed = p.pseudomanifold && p.boundary_ridges.empty();
  if (p.pseudomanifold) {
    if (p.closed) {
      HomologyGroup h = homology(c, c.dim());
      p.orientable = h.free_rank == 1 && h.torsion.empty();
    } else {
      SimplicialComplex bd = boundary_complex(c);
      HomologyGroup h = relative_homology(c, bd, c.dim());
      p.orientable = h.free_rank == 1 && h.torsion.empty();
    }
  }
  return p;
}

Graph facet_ridge_graph(const SimplicialComplex &c) {
  if (!c.is_pure())
    throw std::invalid_argument("facet_ridge_graph: complex is not pure");
  const auto &top = c.top_facets();
  std::vector<int> vs;
  for (std::size_t k = 0; k < top.size(); ++k)
    vs.push_back(static_cast<int>(k + 1));
  std::vector<std::pair<int, int>> es;
  if (c.dim() >= 1) {
    std::set<std::pair<int, int>> seen;
    for (const auto &list : ridge_incidence(c))
      for (std::size_t a = 0; a < list.size(); ++a)
        for (std::size_t b = a + 1; b < list.size(); ++b)
          seen.insert({static_cast<int>(list[a] + 1), static_cast<int>(list[b] + 1)});
    es.assign(seen.begin(), seen.end());
  } else {
    // 0-dimensional: distinct vertices share the empty ridge
    for (std::size_t a = 0; a < top.size(); ++a)
      for (std::size_t b = a + 1; b < top.size(); ++b)
        es.push_back({static_cast<int>(a + 1), static_cast<int>(b + 1)});
  }
  return Graph(vs, es);
}

SimplicialComplex cone_over_graph(const Graph &g, std::optional<int> apex) {
  int x = apex.value_or(g.vertices().empty() ? 1 : g.vertices().back() + 1);
  if (std::binary_search(g.vertices().begin(), g.vertices().end(), x))
    throw std::invalid_argument("cone apex label collides with a graph vertex");
  if (x <= 0)
    throw std::invalid_argument("cone apex label must be positive");
  std::vector<Face> fs;
  std::set<int> covered;
  for (auto [u, v] : g.edges()) {
    fs.push_back({u, v, x});
    covered.insert(u);
    covered.insert(v);
  }
  for (int v : g.vertices())
    if (!covered.count(v))
      fs.push_back({v, x});
  if (fs.empty())
    throw std::invalid_argument("cone over an empty graph");
  return SimplicialComplex(fs);
}

Graph whisker(const Graph &g, const std::vector<int> &attach, std::optional<int> first_label) {
  int next = first_label.value_or(g.vertices().empty() ? 1 : g.vertices().back() + 1);
  std::vector<int> vs = g.vertices();
  std::vector<std::pair<int, int>> es = g.edges();
  for (int a : attach) {
    if (!std::binary_search(g.vertices().begin(), g.vertices().end(), a))
      throw std::invalid_argument("whisker: attachment vertex not in graph");
    if (std::binary_search(g.vertices().begin(), g.vertices().end(), next))
      throw std::invalid_argument("whisker: leaf label collides with a graph vertex");
    vs.push_back(next);
    es.push_back({a, next});
    ++next;
  }
  return Graph(vs, es);
}

SimplicialComplex stellar_subdivide(const SimplicialComplex &c, const Face &facet, std::optional<int> new_vertex) {
  Face f = facet;
  std::sort(f.begin(), f.end());
  auto it = std::find(c.facets().begin(), c.facets().end(), f);
  if (it == c.facets().end())
    throw std::invalid_argument("stellar_subdivide: facet not present");
  int x = new_vertex.value_or(c.vertices().back() + 1);
  if (std::binary_search(c.vertices().begin(), c.vertices().end(), x))
    throw std::invalid_argument("stellar_subdivide: new vertex label collides");
  std::vector<Face> fs;
  for (const auto &g : c.facets())
    if (g != f)
      fs.push_back(g);
  for (std::size_t t = 0; t < f.size(); ++t) {
    Face g;
    for (std::size_t u = 0; u < f.size(); ++u)
      if (u != t)
        g.push_back(f[u]);
    g.push_back(x);
    fs.push_back(g);
  }
  return SimplicialComplex(fs, c.name().empty() ? std::string() : c.name() + "_stellar");
}

} // namespace symtope
