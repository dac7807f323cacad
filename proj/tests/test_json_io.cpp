#include <doctest.h>

#include <fstream>
#include <sstream>

#include "liecoh/catalog.hpp"
#include "liecoh/cohomology.hpp"
#include "liecoh/json_io.hpp"
#include "liecoh/weights.hpp"

using namespace liecoh;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(LIECOH_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string parse_location(std::string_view text) {
  try {
    parse_structure_table(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("fixtures parse into the catalog algebras") {
  const auto h = parse_algebra(fixture("heisenberg3.json"));
  CHECK(h.constants() == load_example("heisenberg3").algebra.constants());
  CHECK(h.basis_names() == std::vector<std::string>{"X", "Y", "Z"});
  CHECK(parse_algebra(fixture("sol3.json")).constants() == load_example("sol3").algebra.constants());
  CHECK(parse_algebra(fixture("euclid3.json")).constants() == load_example("euclid3").algebra.constants());
}

TEST_CASE("catalog export round trips") {
  for (const auto& e : {load_example("heisenberg3"), load_example("sol3", {{"k", Rational(-2, 3)}}),
                        load_example("euclid3"), load_example("abelian", {{"n", 3}})}) {
    const std::string text = algebra_to_json(e.algebra).dump(2);
    const auto back = parse_algebra(text);
    CHECK(back.constants() == e.algebra.constants());
    CHECK(back.basis_names() == e.algebra.basis_names());
    CHECK(algebra_to_json(back).dump(2) == text);
  }
}

TEST_CASE("bad coefficient and Jacobi failures") {
  CHECK(parse_location(fixture("bad_denominator.json")) == "/brackets/0/coeffs/3");
  CHECK_THROWS_AS(parse_algebra(fixture("bad_denominator.json")), ParseError);

  const auto table = parse_structure_table(fixture("bad_jacobi.json"));
  try {
    LieAlgebra::create(table);
    FAIL("expected a JacobiError");
  } catch (const JacobiError& e) {
    REQUIRE(e.defects().size() == 1);
    CHECK(e.defects()[0].i == 0);
    CHECK(e.defects()[0].j == 1);
    CHECK(e.defects()[0].k == 2);
  }
  CHECK_THROWS_AS(parse_algebra(fixture("bad_jacobi.json")), InputError);
}

TEST_CASE("syntax and schema errors carry locations") {
  CHECK_THROWS_AS(parse_structure_table(fixture("truncated.json")), ParseError);
  CHECK(parse_location(fixture("truncated.json")).empty());
  CHECK(parse_location("[1, 2]").empty());
  CHECK(parse_location(R"({"brackets": []})") == "/dim");
  CHECK(parse_location(R"({"dim": 0})") == "/dim");
  CHECK(parse_location(R"({"dim": "3"})") == "/dim");
  CHECK(parse_location(R"({"dim": 2, "basis": ["a"]})") == "/basis");
  CHECK(parse_location(R"({"dim": 2, "basis": ["a", 1]})") == "/basis/1");
  CHECK(parse_location(R"({"dim": 2, "brackets": {}})") == "/brackets");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "coeffs": {}}]})") == "/brackets/0/j");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "j": 3, "coeffs": {}}]})") == "/brackets/0/j");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {}}]})") == "/brackets/0");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"0": "1"}}]})") ==
        "/brackets/0/coeffs/0");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": 0.5}}]})") ==
        "/brackets/0/coeffs/2");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "x"}}]})") ==
        "/brackets/0/coeffs/2");
  CHECK(parse_location(R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "3/4"}}]})") == "<no error>");

  // Duplicate entries are a structural error, not a parse error.
  const auto dup = R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {}}, {"i": 2, "j": 1, "coeffs": {}}]})";
  CHECK_THROWS_AS(parse_algebra(dup), StructureError);
}

TEST_CASE("result serialization") {
  const auto s = load_example("sol3").algebra;
  const auto r = compute_cohomology(s, OneForm::basis(3, 0));
  const Json doc = cohomology_to_json(r, true);
  CHECK(doc.dump() ==
        R"({"omega":["1","0","0"],"betti":[0,1,1,0],"euler_characteristic":0,)"
        R"("representatives":[[],[[{"indices":[2],"coeff":"1"}]],[[{"indices":[1,2],"coeff":"1"}]],[]]})");
  CHECK_FALSE(cohomology_to_json(r, false).contains("representatives"));

  const Json w = weights_to_json(adapted_basis(s));
  CHECK(w["closed_block"] == 1);
  CHECK(w["weights"].dump() == R"([["0","0","0"],["-1","0","0"],["1","0","0"]])");
  CHECK(w["weight_sum_zero"] == true);

  CHECK(omega_set_to_json(omega_set(adapted_basis(s))).dump() == R"([["-1","0","0"],["0","0","0"],["1","0","0"]])");
  CHECK(rational_to_json(parse_rational("-3/6")) == "-1/2");
  CHECK(form_to_json(ExteriorForm(3, 2)).dump() == "[]");
}
