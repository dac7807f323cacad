#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/algebra.hpp"

namespace liecoh {

using Parameters = std::map<std::string, Rational>;

struct ExpectedBetti {
  OneForm omega;
  std::vector<std::size_t> betti;
};

struct CatalogEntry {
  std::string name;
  Parameters parameters;
  LieAlgebra algebra;
  std::string provenance;
  std::vector<ExpectedBetti> expected;
};

// Built-in model algebras:
//   abelian     n >= 1 (required), all brackets zero
//   heisenberg3 [e1,e2] = e3
//   sol3        k != 0 (default 1), [e1,e2] = k e2, [e1,e3] = -k e3
//   euclid3     [e1,e2] = -e3, [e1,e3] = e2 (rotation speed 2*pi absorbed into e1)
// Throws InvalidArgument on unknown names or parameters.
CatalogEntry load_example(const std::string& name, const Parameters& params = {});

std::vector<std::string> example_names();

}  // namespace liecoh
