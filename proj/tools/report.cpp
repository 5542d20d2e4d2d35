#include "report.hpp"

#include "symtope/corpus.hpp"
#include "symtope/equivalence.hpp"
#include "symtope/groebner.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace symtope::cli {

namespace {

json number(const Integer &z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

json numbers(const IntVector &v) {
  json a = json::array();
  for (const auto &z : v)
    a.push_back(number(z));
  return a;
}

json rational(const Rational &q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

json rationals(const RatVector &v) {
  json a = json::array();
  for (const auto &q : v)
    a.push_back(rational(q));
  return a;
}

json monomial(const Exponent &e) {
  json m = json::object();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0)
      m[variable_name(i)] = e[i];
  return m;
}

json matrix_json(const IntegerMatrix &a) {
  json data = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      data.push_back(number(a(i, j)));
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"data", data}};
}

json binomial_json(const Binomial &b) {
  return {{"type", b.type}, {"lead", monomial(b.lead)}, {"trail", monomial(b.trail)}};
}

// Runs one report field; guard exceedances and unsupported inputs become skip reasons.
struct FieldRunner {
  json &skipped;
  bool &mandatory_failed;

  void operator()(const std::string &field, bool mandatory, const std::function<void()> &body) {
    try {
      body();
    } catch (const GuardExceeded &e) {
      skipped[field] = e.guard();
      if (mandatory)
        mandatory_failed = true;
    } catch (const std::domain_error &e) {
      skipped[field] = std::string("unsupported: ") + e.what();
    }
  }
};

HullOptions hull_options() { return {}; }

LatticeCountOptions counting(const AnalyzeOptions &opts) {
  LatticeCountOptions c;
  c.max_points = opts.max_points;
  return c;
}

json fingerprint_json(const Fingerprint &f) {
  json j;
  j["dim"] = f.dim;
  j["vertices"] = f.vertex_count;
  j["facets"] = f.facet_count ? json(*f.facet_count) : json(nullptr);
  j["normalized_volume"] = f.normalized_volume ? number(*f.normalized_volume) : json(nullptr);
  j["hstar"] = f.hstar ? numbers(f.hstar->coefficients) : json(nullptr);
  if (!f.skipped.empty())
    j["skipped"] = f.skipped;
  return j;
}

FingerprintOptions fingerprint_options(const AnalyzeOptions &opts) {
  FingerprintOptions f;
  f.facets = opts.facets;
  f.hstar = opts.hstar;
  f.volume = opts.facets || opts.hstar;
  f.counting = counting(opts);
  f.max_minors = opts.max_minors;
  return f;
}

json polytope_report(const SimplicialComplex &c, Which which, const AnalyzeOptions &opts, bool &mandatory_failed) {
  json r;
  json skipped = json::object();
  FieldRunner run{skipped, mandatory_failed};

  const IntegerMatrix a = which == Which::Homology ? top_boundary_map(c) : top_boundary_map(c).transpose();
  CSPolytope p = which == Which::Homology ? homology_polytope(c) : cohomology_polytope(c);
  r["dim"] = p.dimension();
  r["vertices"] = p.vertex_count();
  r["vertices_certified_by_incidence"] = p.vertices_certified_by_incidence();
  r["crosspolytope"] = is_crosspolytope(p);
  if (opts.dump)
    r["matrix"] = matrix_json(a);
  {
    SpanningReport s = spanning_report(a);
    r["spanning"] = s.spanning;
    r["alpha_max"] = number(s.alpha_max);
  }
  run("reflexivity", false, [&] {
    ReflexivityVerdict v = is_reflexive(p, hull_options());
    json j;
    j["reflexive"] = v.reflexive;
    j["route"] = to_string(v.route);
    if (v.witness) {
      j["witness_kind"] = v.witness_kind;
      j["witness"] = rationals(*v.witness);
    }
    r["reflexivity"] = j;
  });
  if (opts.facets)
    run("facets", true, [&] {
      const auto &facets = p.facets(hull_options());
      r["facets"] = facets.size();
      if (opts.dump) {
        json list = json::array();
        for (const auto &f : facets)
          list.push_back({{"normal", rationals(f.normal)}, {"vertices", f.vertex_indices}});
        r["facet_list"] = list;
      }
    });

  if (opts.hilbert) {
    run("idp", true, [&] {
      IDPOptions io;
      io.hilbert.max_points = opts.max_points;
      io.hilbert.counting = counting(opts);
      io.ehrhart.counting = counting(opts);
      IDPReport rep = idp_report(p, io);
      json j;
      j["hstar"] = numbers(rep.hstar.coefficients);
      j["hilbert_numerator"] = numbers(rep.hilbert_numerator);
      j["idp"] = rep.idp;
      j["idp_up_to"] = rep.idp_up_to;
      j["truncated"] = rep.truncated;
      j["first_failure"] = rep.first_failure ? json(*rep.first_failure) : json(nullptr);
      j["witness_count"] = rep.witness_count;
      json w = json::array();
      for (std::size_t i = 0; i < rep.witnesses.size() && i < 10; ++i)
        w.push_back(numbers(rep.witnesses[i]));
      j["witnesses"] = w;
      r["idp"] = j;
      r["hstar"] = numbers(rep.hstar.coefficients);
    });
  }
  if (opts.hstar && !r.contains("hstar")) {
    run("hstar", true, [&] {
      EhrhartOptions eo;
      eo.counting = counting(opts);
      HStarVector h = ehrhart_hstar(p, eo);
      r["hstar"] = numbers(h.coefficients);
    });
  }
  if (r.contains("hstar")) {
    IntVector h;
    for (const auto &x : r["hstar"])
      h.push_back(Integer(x.get<long>()));
    HStarVector hv{h};
    r["normalized_volume"] = number(hv.normalized_volume());
    r["palindromic"] = hv.palindromic();
    auto g = hv.gamma();
    r["gamma"] = g ? numbers(*g) : json(nullptr);
  }

  if (opts.groebner || opts.triangulate) {
    run(opts.groebner ? "groebner" : "triangulation", true, [&] {
      LatticeCountOptions lc = counting(opts);
      IntegerMatrix sat = saturate(a, lc);
      if (!opts.column_order.empty()) {
        std::vector<std::size_t> sorted = opts.column_order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
          if (sorted.size() != sat.cols() || sorted[i] != i)
            throw std::invalid_argument("--column-order must be a permutation of 0.." + std::to_string(sat.cols() - 1));
        sat = sat.select_columns(opts.column_order);
      }
      std::vector<Binomial> gb = groebner_basis(sat);
      if (opts.groebner) {
        GBDiagnostics d = gb_diagnostics(gb);
        json j;
        j["size"] = gb.size();
        j["squarefree_leads"] = d.squarefree_leads;
        j["nonsquarefree_types"] = d.nonsquarefree_types;
        j["type_counts"] = d.type_counts;
        try {
          j["rut_obstruction"] = rut_obstruction(a);
        } catch (const std::domain_error &) {
          j["rut_obstruction"] = nullptr;
        }
        DivisionTrials t = division_closure_trials(sat, gb, opts.trials, opts.seed);
        j["division_trials"] = {{"trials", t.trials}, {"failures", t.failures}, {"seed", opts.seed}};
        json sample = json::array();
        for (std::size_t i = 0; i < gb.size() && i < 5; ++i)
          sample.push_back(binomial_json(gb[i]));
        j["sample"] = sample;
        if (opts.dump) {
          json basis = json::array();
          for (const auto &b : gb)
            basis.push_back(binomial_json(b));
          j["basis"] = basis;
        }
        r["groebner"] = j;
      }
      if (opts.triangulate) {
        run("triangulation", true, [&] {
          Triangulation t = triangulation_from_gb(sat, gb, opts.max_cells);
          json j;
          j["cells"] = t.cells.size();
          j["total_volume"] = number(t.total_volume);
          j["lattice_determinant"] = number(t.lattice_determinant);
          j["all_unimodular"] = t.all_unimodular;
          r["triangulation"] = j;
        });
      }
    });
  }

  run("model", false, [&] {
    ModelVerdict v = model_polytope(c, which, fingerprint_options(opts));
    json j;
    j["route"] = v.route;
    j["model"] = v.model;
    j["fingerprint_match"] = v.fingerprint_match ? json(*v.fingerprint_match) : json(nullptr);
    if (v.actual)
      j["actual"] = fingerprint_json(*v.actual);
    if (v.predicted)
      j["predicted"] = fingerprint_json(*v.predicted);
    r["model"] = j;
  });
  if (!p.warnings().empty())
    r["warnings"] = p.warnings();
  r["skipped"] = skipped;
  return r;
}

json profile_json(const SimplicialComplex &c) {
  ComplexProfile prof = classify(c);
  json j;
  j["name"] = c.name();
  j["dim"] = prof.dim;
  j["f_vector"] = prof.f_vector;
  j["facets"] = c.top_facets().size();
  j["pure"] = prof.pure;
  j["pseudomanifold"] = prof.pseudomanifold;
  j["closed"] = prof.closed;
  j["strongly_connected"] = prof.strongly_connected;
  j["orientable"] = prof.orientable ? json(*prof.orientable) : json(nullptr);
  return j;
}

json homology_json(const SimplicialComplex &c) {
  json a = json::array();
  for (int j = 0; j <= c.dim(); ++j) {
    HomologyGroup h = homology(c, j);
    a.push_back({{"degree", j}, {"group", to_string(h)}, {"free_rank", h.free_rank}, {"torsion", numbers(h.torsion)}});
  }
  return a;
}

json envelope(const std::string &command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

} // namespace

SimplicialComplex complex_from_json(const json &j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
    throw std::invalid_argument("complex JSON needs a \"facets\" array");
  std::vector<std::vector<int>> facets;
  for (const auto &f : j["facets"]) {
    if (!f.is_array() || f.empty())
      throw std::invalid_argument("each facet must be a nonempty array of vertex labels");
    std::vector<int> face;
    for (const auto &v : f) {
      if (!v.is_number_integer() || v.get<long>() <= 0)
        throw std::invalid_argument("vertex labels must be positive integers");
      face.push_back(v.get<int>());
    }
    facets.push_back(std::move(face));
  }
  if (facets.empty())
    throw std::invalid_argument("complex has no facets");
  return build_complex(facets, j.value("name", std::string("unnamed")));
}

json complex_to_json(const SimplicialComplex &c) {
  json j;
  j["name"] = c.name();
  j["facets"] = c.facets();
  return j;
}

SimplicialComplex load_complex(const std::string &source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0)
    return corpus_fixture(source.substr(prefix.size())).complex;
  std::ifstream in(source);
  if (!in)
    throw std::invalid_argument("cannot open " + source);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument("malformed JSON in " + source + ": " + e.what());
  }
  return complex_from_json(j);
}

json analyze(const SimplicialComplex &c, const AnalyzeOptions &opts) {
  json r = envelope("analyze");
  bool mandatory_failed = false;
  r["complex"] = profile_json(c);
  r["homology"] = homology_json(c);
  json polys = json::object();
  if (c.dim() < 1) {
    r["polytopes"] = polys;
    r["skipped"] = {{"polytopes", "unsupported: complex has no edges"}};
    r["mandatory_guard_exceeded"] = false;
    return r;
  }
  if (opts.homology)
    polys["homology"] = polytope_report(c, Which::Homology, opts, mandatory_failed);
  if (opts.cohomology)
    polys["cohomology"] = polytope_report(c, Which::Cohomology, opts, mandatory_failed);
  r["polytopes"] = polys;
  r["mandatory_guard_exceeded"] = mandatory_failed;
  return r;
}

json compare(const SimplicialComplex &a, const SimplicialComplex &b, const AnalyzeOptions &opts) {
  json r = envelope("compare");
  bool mandatory_failed = false;
  json skipped = json::object();
  FieldRunner run{skipped, mandatory_failed};
  r["a"] = profile_json(a);
  r["b"] = profile_json(b);
  FingerprintOptions fo = fingerprint_options(opts);
  json polys = json::object();
  for (Which w : {Which::Homology, Which::Cohomology}) {
    if ((w == Which::Homology && !opts.homology) || (w == Which::Cohomology && !opts.cohomology))
      continue;
    run(to_string(w), false, [&] {
      auto pa = w == Which::Homology ? homology_polytope(a) : cohomology_polytope(a);
      auto pb = w == Which::Homology ? homology_polytope(b) : cohomology_polytope(b);
      Fingerprint fa = fingerprint(pa, fo), fb = fingerprint(pb, fo);
      polys[to_string(w)] = {{"a", fingerprint_json(fa)}, {"b", fingerprint_json(fb)}, {"match", fingerprints_match(fa, fb)}};
    });
  }
  r["fingerprints"] = polys;
  ComplexProfile qa = classify(a), qb = classify(b);
  const bool spheres = qa.pseudomanifold && qa.closed && qa.orientable.value_or(false) && qb.pseudomanifold &&
                       qb.closed && qb.orientable.value_or(false);
  if (spheres) {
    run("facet_ridge_graphs", false, [&] {
      const bool iso = shellable_sphere_equivalence(a, b);
      r["sphere_route"] = {{"assumes", "both complexes are shellable spheres"},
                           {"facet_ridge_graphs_isomorphic", iso},
                           {"cohomology_polytopes_equivalent", iso},
                           {"triangle_in_facet_ridge_graph",
                            {has_triangle(facet_ridge_graph(a)), has_triangle(facet_ridge_graph(b))}}};
    });
  } else {
    skipped["sphere_route"] = "unsupported: needs two closed orientable pseudomanifolds";
  }
  r["skipped"] = skipped;
  r["mandatory_guard_exceeded"] = mandatory_failed;
  return r;
}

json corpus_list() {
  json r = envelope("corpus list");
  json a = json::array();
  for (const auto &f : corpus())
    a.push_back({{"name", f.name},
                 {"description", f.description},
                 {"dim", f.complex.dim()},
                 {"f_vector", f.complex.f_vector()}});
  r["fixtures"] = a;
  return r;
}

json sweep_subcomplexes(const SimplicialComplex &c, const AnalyzeOptions &opts) {
  json r = envelope("sweep-subcomplexes");
  r["complex"] = profile_json(c);
  const std::size_t s = c.top_facets().size();
  if (s >= 63 || (std::uint64_t{1} << s) - 1 > opts.max_subsets) {
    r["skipped"] = {{"sweep", "max-subsets"}};
    r["mandatory_guard_exceeded"] = true;
    return r;
  }
  bool parent = false;
  json skipped = json::object();
  bool dummy = false;
  FieldRunner run{skipped, dummy};
  run("parent", false, [&] { parent = is_reflexive(homology_polytope(c)).reflexive; });
  r["reflexive"] = parent;
  std::uint64_t reflexive = 0, non_reflexive = 0, guarded = 0;
  json counterexamples = json::array();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < s; ++i)
      if (mask >> i & 1)
        pick.push_back(i);
    SimplicialComplex sub = c.subcomplex(pick);
    try {
      bool ok = is_reflexive(homology_polytope(sub)).reflexive;
      if (ok) {
        ++reflexive;
      } else {
        ++non_reflexive;
        if (parent && counterexamples.size() < 20)
          counterexamples.push_back(sub.top_facets());
      }
    } catch (const GuardExceeded &) {
      ++guarded;
    }
  }
  r["subcomplexes"] = (std::uint64_t{1} << s) - 1;
  r["reflexive_subcomplexes"] = reflexive;
  r["non_reflexive_subcomplexes"] = non_reflexive;
  r["guarded_subcomplexes"] = guarded;
  r["counterexamples"] = counterexamples; // reflexive parent, non-reflexive subcomplex
  r["skipped"] = skipped;
  r["mandatory_guard_exceeded"] = false;
  return r;
}

namespace {

std::string scalar(const json &v) {
  if (v.is_string())
    return v.get<std::string>();
  return v.dump();
}

void flatten(const json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &rows) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    return;
  }
  rows.emplace_back(prefix, scalar(j));
}

} // namespace

std::string render_table(const json &report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto &[k, v] : rows)
    width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto &[k, v] : rows)
    out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

} // namespace symtope::cli
