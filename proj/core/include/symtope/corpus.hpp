#pragma once

#include "symtope/complex.hpp"

#include <string>
#include <vector>

namespace symtope {

struct Fixture {
  std::string name;
  std::string description;
  SimplicialComplex complex;
};

// Built-in fixtures in a fixed order.
const std::vector<Fixture> &corpus();
// Throws std::out_of_range for an unknown name.
const Fixture &corpus_fixture(const std::string &name);
std::vector<std::string> corpus_names();

} // namespace symtope
