#include <doctest.h>

#include "liecoh/catalog.hpp"
#include "liecoh/exterior.hpp"
#include "oracles.hpp"

using namespace liecoh;

namespace {

ExteriorForm e(std::size_t n, IndexTuple t, const Rational& q = 1) {
  for (auto& i : t) --i;  // tests use 1-based indices
  return ExteriorForm::monomial(n, t, q);
}

ExteriorForm random_form(std::mt19937& rng, std::size_t n, std::size_t p) {
  Vector coords;
  for (std::size_t i = 0; i < binomial(n, p); ++i) {
    coords.push_back(rng() % 3 == 0 ? Rational(0) : oracle::random_rational(rng));
  }
  return ExteriorForm::from_coordinates(n, p, coords);
}

std::vector<LieAlgebra> sample_algebras(std::mt19937& rng) {
  std::vector<LieAlgebra> out;
  for (const auto& c : oracle::catalog_entries()) out.push_back(c.algebra);
  for (int i = 0; i < 6; ++i) out.push_back(oracle::random_semidirect(rng, 2 + rng() % 2));
  return out;
}

}  // namespace

TEST_CASE("exterior basis is lexicographic and indexed consistently") {
  const auto b = exterior_basis(4, 2);
  REQUIRE(b.size() == 6);
  CHECK(b.front() == IndexTuple{0, 1});
  CHECK(b[2] == IndexTuple{0, 3});
  CHECK(b.back() == IndexTuple{2, 3});
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t p = 0; p <= n; ++p) {
      const auto basis = exterior_basis(n, p);
      CHECK(basis.size() == binomial(n, p));
      for (std::size_t i = 0; i < basis.size(); ++i) CHECK(basis_index(n, basis[i]) == i);
      for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
    }
  CHECK(exterior_basis(3, 4).empty());
  CHECK(exterior_basis(3, 0) == std::vector<IndexTuple>{IndexTuple{}});
}

TEST_CASE("wedge examples") {
  CHECK(wedge(e(3, {1}), e(3, {1})).is_zero());
  CHECK(wedge(e(3, {1}), e(3, {2})) == e(3, {1, 2}));
  CHECK(wedge(e(3, {2}), e(3, {1})) == e(3, {1, 2}, -1));
  CHECK(wedge(e(3, {1}) + e(3, {2}), e(3, {2, 3})) == e(3, {1, 2, 3}));
  CHECK(wedge(ExteriorForm::scalar(3, 5), e(3, {1, 3})) == e(3, {1, 3}, 5));

  const auto top = wedge(e(3, {1, 2}), e(3, {2, 3}));
  CHECK(top.is_zero());
  CHECK(wedge(e(2, {1, 2}), e(2, {1})).degree() == 3);
  CHECK_THROWS_AS(wedge(e(3, {1}), e(4, {1})), InvalidArgument);
}

TEST_CASE("forms reject malformed monomials") {
  CHECK_THROWS_AS(ExteriorForm::monomial(3, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(ExteriorForm::monomial(3, {1, 1}), InvalidArgument);
  CHECK_THROWS_AS(ExteriorForm::monomial(3, {3}), InvalidArgument);
  CHECK_THROWS_AS(e(3, {1}) + e(3, {1, 2}), InvalidArgument);
  CHECK(to_string(e(3, {1, 2}) - e(3, {1, 3}, Rational(1, 2))) == "e1^e2 - 1/2*e1^e3");
}

TEST_CASE("property: wedge is graded-commutative and associative") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t p = rng() % (n + 1), q = rng() % (n + 1), r = rng() % (n + 1);
    const auto a = random_form(rng, n, p), b = random_form(rng, n, q), c = random_form(rng, n, r);
    const Rational sign = (p * q) % 2 ? -1 : 1;
    CHECK(wedge(a, b) == sign * wedge(b, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("Chevalley-Eilenberg differential on generators") {
  const auto h = load_example("heisenberg3").algebra;
  CHECK(ce_differential(h, e(3, {1})).is_zero());
  CHECK(ce_differential(h, e(3, {2})).is_zero());
  CHECK(ce_differential(h, e(3, {3})) == e(3, {1, 2}, -1));

  for (Rational k : {Rational(1), Rational(2), Rational(-1, 3)}) {
    const auto s = load_example("sol3", {{"k", k}}).algebra;
    CHECK(ce_differential(s, e(3, {1})).is_zero());
    CHECK(ce_differential(s, e(3, {2})) == e(3, {1, 2}, -k));
    CHECK(ce_differential(s, e(3, {3})) == e(3, {1, 3}, k));
  }

  const auto u = load_example("euclid3").algebra;
  CHECK(ce_differential(u, e(3, {2})) == e(3, {1, 3}, -1));
  CHECK(ce_differential(u, e(3, {3})) == e(3, {1, 2}));

  CHECK(ce_differential(h, ExteriorForm::scalar(3, 7)).is_zero());
  CHECK(ce_differential(h, e(3, {1, 2, 3})).degree() == 4);
}

TEST_CASE("deformed differential") {
  const auto s = load_example("sol3", {{"k", 1}}).algebra;
  const OneForm e1 = OneForm::basis(3, 0);
  CHECK(deformed_differential(s, e1, e(3, {2})).is_zero());
  CHECK(deformed_differential(s, e1, ExteriorForm::scalar(3, 1)) == ExteriorForm::from_one_form(e1));
  CHECK(deformed_differential(s, e1, e(3, {3})) == e(3, {1, 3}, 2));

  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto xi = random_form(rng, 3, rng() % 4);
    CHECK(deformed_differential(s, OneForm(3), xi) == ce_differential(s, xi));
  }

  const auto h = load_example("heisenberg3").algebra;
  CHECK_THROWS_AS(deformed_differential(h, OneForm::basis(3, 2), e(3, {1})), NonClosedForm);
  CHECK_THROWS_AS(deformed_differential(h, OneForm(2), e(3, {1})), InvalidArgument);
}

TEST_CASE("differential matrices") {
  const auto a = load_example("abelian", {{"n", 2}}).algebra;
  for (const auto& m : differential_matrices(a, OneForm(2)).all()) CHECK(m.is_zero());

  const auto h = load_example("heisenberg3").algebra;
  const auto dh = differential_matrices(h, OneForm(3));
  CHECK(dh.all().size() == 3);
  CHECK(rank(dh.degree(1)) == 1);
  CHECK(is_zero(dh.degree(1).column(0)));
  CHECK(is_zero(dh.degree(1).column(1)));
  CHECK_FALSE(is_zero(dh.degree(1).column(2)));

  const auto s = load_example("sol3", {{"k", 1}}).algebra;
  const auto d2 = differential_matrices(s, OneForm::basis(3, 0)).degree(2);
  REQUIRE(d2.rows() == 1);
  REQUIRE(d2.cols() == 3);
  CHECK(d2(0, 0) == 0);
  CHECK(d2(0, 1) == 0);
  CHECK(d2(0, 2) == 1);  // e2^e3 -> e1^e2^e3

  for (std::size_t p = 0; p < 3; ++p) {
    CHECK(dh.degree(p).rows() == binomial(3, p + 1));
    CHECK(dh.degree(p).cols() == binomial(3, p));
  }
  CHECK_THROWS_AS(differential_matrices(h, OneForm::basis(3, 2)), NonClosedForm);
}

TEST_CASE("property: differential matrices match the invariant-form formula") {
  std::mt19937 rng(17);
  for (const auto& g : sample_algebras(rng)) {
    const auto closed = closed_one_forms(g).basis();
    std::vector<OneForm> forms{OneForm(g.dim())};
    for (const auto& w : closed) forms.push_back(oracle::random_rational(rng) * OneForm(w));
    for (const auto& w : forms) {
      const auto d = differential_matrices(g, w);
      for (std::size_t p = 0; p < g.dim(); ++p) {
        CHECK(d.degree(p) == oracle::differential_matrix(g.constants(), w, p));
      }
    }
  }
}

TEST_CASE("d^2 = 0 exactly when the Jacobi identity holds") {
  std::mt19937 rng(23);
  for (const auto& g : sample_algebras(rng)) {
    const OneForm zero(g.dim());
    for (std::size_t p = 0; p + 1 < g.dim(); ++p) {
      CHECK((twisted_differential_matrix(g.constants(), zero, p + 1) *
             twisted_differential_matrix(g.constants(), zero, p))
                .is_zero());
    }
  }

  // [e1,e2] = e1, [e1,e3] = e3 violates Jacobi; d^2 e^3 is then nonzero.
  StructureTable broken{3, {}, {{0, 1, Vector{1, 0, 0}}, {0, 2, Vector{0, 0, 1}}}};
  const auto c = StructureConstants::from_table(broken);
  const RationalMatrix d1 = twisted_differential_matrix(c, OneForm(3), 0 + 1);
  const RationalMatrix d2 = twisted_differential_matrix(c, OneForm(3), 2);
  CHECK_FALSE((d2 * d1).is_zero());
  CHECK_FALSE(ce_differential(c, ce_differential(c, e(3, {3}))).is_zero());
}

TEST_CASE("d_omega squares to zero for closed omega, and to (d eta)^ otherwise") {
  std::mt19937 rng(29);
  for (const auto& g : sample_algebras(rng)) {
    for (const auto& w : closed_one_forms(g).basis()) {
      const auto d = differential_matrices(g, OneForm(w));
      for (std::size_t p = 0; p + 1 < g.dim(); ++p) CHECK((d.degree(p + 1) * d.degree(p)).is_zero());
    }
  }

  const auto h = load_example("heisenberg3").algebra;
  const OneForm eta = OneForm::basis(3, 2);
  const auto d_eta = ce_differential(h, ExteriorForm::from_one_form(eta));  // -e1^e2
  for (std::size_t p = 0; p + 1 < 3; ++p) {
    const RationalMatrix sq = twisted_differential_matrix(h.constants(), eta, p + 1) *
                              twisted_differential_matrix(h.constants(), eta, p);
    CHECK_FALSE(sq.is_zero());
    const auto basis = exterior_basis(3, p);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const auto expected = wedge(d_eta, ExteriorForm::monomial(3, basis[j]));
      CHECK(sq.column(j) == expected.coordinates());
    }
  }
}

TEST_CASE("Leibniz rule holds for d and fails for d_omega") {
  std::mt19937 rng(31);
  for (const auto& g : sample_algebras(rng)) {
    const std::size_t n = g.dim();
    for (int trial = 0; trial < 8; ++trial) {
      const std::size_t p = rng() % n, q = rng() % (n - p + 1);
      const auto a = random_form(rng, n, p), b = random_form(rng, n, q);
      const Rational sign = p % 2 ? -1 : 1;
      CHECK(ce_differential(g, wedge(a, b)) ==
            wedge(ce_differential(g, a), b) + sign * wedge(a, ce_differential(g, b)));
    }
  }

  // d_w(1 ^ 1) = w while d_w(1) ^ 1 + 1 ^ d_w(1) = 2w.
  const auto s = load_example("sol3", {{"k", 1}}).algebra;
  const OneForm w = OneForm::basis(3, 0);
  const auto one = ExteriorForm::scalar(3, 1);
  const auto lhs = deformed_differential(s, w, wedge(one, one));
  const auto rhs = wedge(deformed_differential(s, w, one), one) + wedge(one, deformed_differential(s, w, one));
  CHECK(lhs != rhs);
}
