#pragma once

#include <string_view>

#include <json.hpp>

#include "liecoh/algebra.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/report.hpp"
#include "liecoh/weights.hpp"

// Algebra file format (indices are 1-based):
//
//   {"dim": 3, "basis": ["e1", "e2", "e3"],
//    "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]}
//
// "basis" and "brackets" are optional; omitted brackets are zero.
// Coefficients are exact rationals written "p" or "p/q". Other top-level keys
// are ignored.
namespace liecoh {

using Json = nlohmann::ordered_json;

// Throws ParseError (with a JSON pointer location) on syntax or schema errors.
StructureTable parse_structure_table(std::string_view text);

// parse_structure_table followed by validation; throws StructureError or
// JacobiError as well.
LieAlgebra parse_algebra(std::string_view text);

Json algebra_to_json(const LieAlgebra& g);
Json rational_to_json(const Rational& q);
Json one_form_to_json(const OneForm& w);
Json form_to_json(const ExteriorForm& f);  // [{"indices": [...], "coeff": "p/q"}, ...]
Json cohomology_to_json(const CohomologyResult& r, bool with_representatives);
Json weights_to_json(const WeightData& w);
Json omega_set_to_json(const OmegaSet& s);
Json scan_to_json(const ScanTable& t);
Json novikov_to_json(const NovikovReport& r);

}  // namespace liecoh
