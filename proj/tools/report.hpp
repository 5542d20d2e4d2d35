#pragma once

#include "symtope/complex.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace symtope::cli {

using json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "symtope/1";

struct AnalyzeOptions {
  bool homology = true;
  bool cohomology = true;
  bool hstar = false;
  bool hilbert = false;
  bool groebner = false;
  bool triangulate = false;
  bool facets = false;
  bool dump = false; // matrix, facet list and full Groebner basis
  std::uint64_t max_points = 2'000'000;
  std::uint64_t max_cells = 1'000'000;
  std::uint64_t max_minors = 20'000'000;
  std::uint64_t max_subsets = 4096;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  // Permutation of the saturated columns F_1..F_s before the Groebner basis (which depends on it).
  std::vector<std::size_t> column_order;
};

// "builtin:NAME" or a path to {"name": ..., "facets": [[...], ...]}.
// Throws std::out_of_range for an unknown builtin and std::invalid_argument for bad files.
SimplicialComplex load_complex(const std::string &source);
SimplicialComplex complex_from_json(const json &j);
json complex_to_json(const SimplicialComplex &c);

// Every report carries "mandatory_guard_exceeded" when a requested field hit a guard.
json analyze(const SimplicialComplex &c, const AnalyzeOptions &opts);
json compare(const SimplicialComplex &a, const SimplicialComplex &b, const AnalyzeOptions &opts);
json corpus_list();
json sweep_subcomplexes(const SimplicialComplex &c, const AnalyzeOptions &opts);

std::string render_table(const json &report);

} // namespace symtope::cli
