#include <doctest.h>

#include "liecoh/algebra.hpp"
#include "liecoh/catalog.hpp"
#include "oracles.hpp"

using namespace liecoh;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// [e1,e2] = e1, [e1,e3] = e3, [e2,e3] = 0: not a Lie algebra.
StructureTable broken_table() {
  return {3, {}, {{0, 1, vec({1, 0, 0})}, {0, 2, vec({0, 0, 1})}}};
}

StructureTable two_dim_nonunimodular() { return {2, {}, {{0, 1, vec({0, 1})}}}; }

// 4x4 matrix realizations of the Lie algebras, used to recompute brackets as
// commutators AB - BA.
using Mat = RationalMatrix;

Mat commutator(const Mat& a, const Mat& b) {
  Mat ab = a * b, ba = b * a;
  Mat out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ab(i, j) - ba(i, j);
  return out;
}

// Coordinates of `target` in the span of `basis` (flattened entries).
Vector coordinates_in(const std::vector<Mat>& basis, const Mat& target) {
  std::vector<Vector> cols;
  for (const auto& b : basis) {
    Vector flat;
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) flat.push_back(b(i, j));
    cols.push_back(flat);
  }
  Vector flat;
  for (std::size_t i = 0; i < target.rows(); ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) flat.push_back(target(i, j));
  auto u = in_image(RationalMatrix::from_columns(cols), flat);
  REQUIRE(u);
  return *u;
}

void check_against_realization(const LieAlgebra& g, const std::vector<Mat>& basis) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      CHECK(g.bracket(i, j) == coordinates_in(basis, commutator(basis[i], basis[j])));
    }
}

Mat m4(std::initializer_list<std::tuple<int, int, long>> entries, std::size_t n = 4) {
  Mat m(n, n);
  for (auto [r, c, v] : entries) m(r, c) = v;
  return m;
}

}  // namespace

TEST_CASE("validate_lie_algebra") {
  CHECK(validate_lie_algebra({3, {}, {{0, 1, vec({0, 0, 1})}}}).ok());
  CHECK(validate_lie_algebra({4, {}, {}}).ok());

  const auto report = validate_lie_algebra(broken_table());
  REQUIRE(report.defects.size() == 1);
  CHECK(report.defects[0].i == 0);
  CHECK(report.defects[0].j == 1);
  CHECK(report.defects[0].k == 2);
  // [[e1,e2],e3] = [e1,e3] = e3; the other two cyclic terms vanish.
  CHECK(report.defects[0].defect == vec({0, 0, 1}));
}

TEST_CASE("Jacobi defects are reported exhaustively") {
  // 4-dim: [e1,e2] = e1, [e1,e3] = e3, [e1,e4] = e4 fails on (1,2,3) and (1,2,4).
  StructureTable t{4, {}, {{0, 1, vec({1, 0, 0, 0})}, {0, 2, vec({0, 0, 1, 0})}, {0, 3, vec({0, 0, 0, 1})}}};
  const auto report = validate_lie_algebra(t);
  CHECK(report.defects.size() == 2);
  CHECK_THROWS_AS(LieAlgebra::create(t), JacobiError);
  try {
    LieAlgebra::create(t);
  } catch (const JacobiError& e) {
    CHECK(e.defects().size() == 2);
  }
}

TEST_CASE("structural errors are distinct from Jacobi failures") {
  CHECK_THROWS_AS(validate_lie_algebra({0, {}, {}}), StructureError);
  CHECK_THROWS_AS(validate_lie_algebra({2, {}, {{0, 1, vec({1})}}}), StructureError);
  CHECK_THROWS_AS(validate_lie_algebra({2, {}, {{0, 2, vec({1, 0})}}}), StructureError);
  CHECK_THROWS_AS(validate_lie_algebra({2, {}, {{1, 1, vec({1, 0})}}}), StructureError);
  CHECK_THROWS_AS(validate_lie_algebra({2, {}, {{0, 1, vec({1, 0})}, {1, 0, vec({1, 0})}}}),
                  StructureError);
  CHECK_THROWS_AS(validate_lie_algebra({2, {"x"}, {}}), StructureError);
}

TEST_CASE("brackets given with i > j are read antisymmetrically") {
  const auto g = LieAlgebra::create({3, {}, {{1, 0, vec({0, 0, -1})}}});
  CHECK(g.bracket(0, 1) == vec({0, 0, 1}));
  CHECK(g.constants() == load_example("heisenberg3").algebra.constants());
}

TEST_CASE("derived subalgebra and closed 1-forms") {
  const auto h = load_example("heisenberg3").algebra;
  const auto s = load_example("sol3", {{"k", 1}}).algebra;
  const auto a = load_example("abelian", {{"n", 4}}).algebra;

  CHECK(derived_subalgebra(h).basis() == std::vector<Vector>{vec({0, 0, 1})});
  CHECK(derived_subalgebra(a).dim() == 0);
  CHECK(derived_subalgebra(s).basis() == std::vector<Vector>{vec({0, 1, 0}), vec({0, 0, 1})});

  CHECK(closed_one_forms(h).basis() == std::vector<Vector>{vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK(closed_one_forms(s).basis() == std::vector<Vector>{vec({1, 0, 0})});
  CHECK(closed_one_forms(a).dim() == 4);
}

TEST_CASE("classification") {
  CHECK(classify(load_example("heisenberg3").algebra) == AlgebraClass::nilpotent);
  CHECK(classify(load_example("sol3", {{"k", 1}}).algebra) == AlgebraClass::solvable);
  CHECK(classify(load_example("euclid3").algebra) == AlgebraClass::solvable);
  CHECK(classify(load_example("abelian", {{"n", 2}}).algebra) == AlgebraClass::abelian);

  // sl(2) in the basis h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  StructureConstants c(3);
  c.set_bracket(0, 1, vec({0, 2, 0}));
  c.set_bracket(0, 2, vec({0, 0, -2}));
  c.set_bracket(1, 2, vec({1, 0, 0}));
  const auto sl2 = LieAlgebra::create(std::move(c));
  CHECK(classify(sl2) == AlgebraClass::non_solvable);
  CHECK(closed_one_forms(sl2).dim() == 0);
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(load_example("sol3", {{"k", 1}}).algebra));
  CHECK(is_unimodular(load_example("heisenberg3").algebra));
  CHECK(is_unimodular(load_example("euclid3").algebra));
  CHECK_FALSE(is_unimodular(LieAlgebra::create(two_dim_nonunimodular())));
}

TEST_CASE("change_basis examples") {
  const auto h = load_example("heisenberg3").algebra;
  CHECK(change_basis(h, RationalMatrix::identity(3)).constants() == h.constants());

  RationalMatrix scale = RationalMatrix::identity(3);
  scale(2, 2) = 2;
  const auto h2 = change_basis(h, scale);
  CHECK(h2.bracket(0, 1) == Vector{0, 0, Rational(1, 2)});

  // Dual rescaling e~^3 = t^2 e^3 means f_3 = e_3 / t^2; the diagonal action
  // of e_1 is unchanged: [f1,f2] = k f2, [f1,f3] = -k f3.
  const auto s = load_example("sol3", {{"k", 3}}).algebra;
  RationalMatrix t = RationalMatrix::identity(3);
  t(2, 2) = Rational(1, 4);  // t = 2
  const auto st = change_basis(s, t);
  CHECK(st.constants() == s.constants());

  // Mixing e_2 and e_3 changes the constants but not the structure.
  RationalMatrix mix = RationalMatrix::identity(3);
  mix(1, 2) = 1;  // f3 = e2 + e3
  const auto sm = change_basis(s, mix);
  CHECK(sm.bracket(0, 2) == Vector{0, 6, -3});  // [e1, e2+e3] = 3e2 - 3e3 = 6 f2 - 3 f3

  CHECK_THROWS_AS(change_basis(h, RationalMatrix(3, 3)), SingularMatrix);
  CHECK_THROWS_AS(change_basis(h, RationalMatrix::identity(2)), InvalidArgument);
}

TEST_CASE("catalog constants agree with their matrix realizations") {
  // Heisenberg: upper triangular 3x3.
  check_against_realization(load_example("heisenberg3").algebra,
                            {m4({{0, 1, 1}}, 3), m4({{1, 2, 1}}, 3), m4({{0, 2, 1}}, 3)});
  // sol3 with k = 2: e1 = diag(k, -k, 0, 0) + E_34, e2 = E_14, e3 = E_24.
  check_against_realization(load_example("sol3", {{"k", 2}}).algebra,
                            {m4({{0, 0, 2}, {1, 1, -2}, {2, 3, 1}}), m4({{0, 3, 1}}), m4({{1, 3, 1}})});
  // euclid3 with the rotation speed rescaled to 1 (the E_34 entry commutes
  // with e2, e3 and does not affect the brackets).
  check_against_realization(load_example("euclid3").algebra,
                            {m4({{0, 1, 1}, {1, 0, -1}, {2, 3, 1}}), m4({{0, 3, 1}}), m4({{1, 3, 1}})});
}

TEST_CASE("property: structural invariants under random basis changes") {
  std::mt19937 rng(2024);
  for (const auto& entry : oracle::catalog_entries()) {
    const auto& g = entry.algebra;
    for (int trial = 0; trial < 10; ++trial) {
      const RationalMatrix m = oracle::random_invertible(rng, g.dim());
      const LieAlgebra h = change_basis(g, m);  // re-validated inside
      CHECK(jacobi_defects(h.constants()).ok());
      CHECK(derived_subalgebra(h).dim() + closed_one_forms(h).dim() == h.dim());
      CHECK(classify(h) == classify(g));
      CHECK(is_unimodular(h) == is_unimodular(g));

      // Closed forms pull back to closed forms.
      for (const auto& w : closed_one_forms(g).basis()) {
        CHECK(closed_one_forms(h).contains(transform_one_form(OneForm(w), m).coeffs));
      }
    }
  }
}

TEST_CASE("property: nilpotent algebras are unimodular with b1 >= 2") {
  std::mt19937 rng(5);
  int nilpotent_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_semidirect(rng, 1 + rng() % 3);
    CHECK(derived_subalgebra(g).dim() + closed_one_forms(g).dim() == g.dim());
    if (classify(g) == AlgebraClass::nilpotent || classify(g) == AlgebraClass::abelian) {
      ++nilpotent_seen;
      CHECK(is_unimodular(g));
      CHECK(closed_one_forms(g).dim() >= 2);
    }
  }
  const auto h = load_example("heisenberg3").algebra;
  CHECK(is_unimodular(h));
  CHECK(closed_one_forms(h).dim() >= 2);
}

TEST_CASE("OneForm arithmetic and printing") {
  const OneForm a = OneForm::basis(3, 0);
  const OneForm b(Vector{0, Rational(-1, 2), 2});
  CHECK(to_string(a + b) == "e^1 - 1/2*e^2 + 2*e^3");
  CHECK(to_string(OneForm(3)) == "0");
  CHECK((a - a).is_zero());
  CHECK(Rational(2) * a == a + a);
  CHECK(a(vec({5, 1, 1})) == 5);
  CHECK_THROWS_AS(a + OneForm(2), InvalidArgument);
}
