#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liecoh/algebra.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

// Strictly increasing 0-based indices (i1 < ... < ip) naming e^{i1}^...^e^{ip}.
using IndexTuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

// Basis of Lambda^p(g*) in lexicographic order. Matrix rows and columns of the
// differential follow this order.
std::vector<IndexTuple> exterior_basis(std::size_t dim, std::size_t degree);

// Position of `t` in exterior_basis(dim, t.size()).
std::size_t basis_index(std::size_t dim, const IndexTuple& t);

// Homogeneous element of Lambda^p(g*). Zero coefficients are never stored.
// Degrees above dim are allowed and always zero.
class ExteriorForm {
 public:
  ExteriorForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree) {}

  static ExteriorForm scalar(std::size_t dim, const Rational& value);
  static ExteriorForm monomial(std::size_t dim, IndexTuple indices, const Rational& coeff = 1);
  static ExteriorForm from_one_form(const OneForm& w);
  static ExteriorForm from_coordinates(std::size_t dim, std::size_t degree, std::span<const Rational> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::map<IndexTuple, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const IndexTuple& t) const;

  // Adds `coeff` to the coefficient of the sorted tuple `t`.
  void add_term(const IndexTuple& t, const Rational& coeff);

  // Coordinates in exterior_basis(dim, degree).
  Vector coordinates() const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator-(const ExteriorForm& a);
  friend ExteriorForm operator*(const Rational& s, const ExteriorForm& a);
  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  void check_compatible(const ExteriorForm& o) const;

  std::size_t dim_;
  std::size_t degree_;
  std::map<IndexTuple, Rational> terms_;
};

// 1-based rendering, e.g. "e1^e2 - 1/2*e1^e3".
std::string to_string(const ExteriorForm& f);

// Graded-commutative product. Throws InvalidArgument on dimension mismatch.
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

// Chevalley-Eilenberg differential: de^k = -sum_{i<j} C_ij^k e^i^e^j, extended
// by the graded Leibniz rule. The StructureConstants overload does not assume
// the Jacobi identity.
ExteriorForm ce_differential(const StructureConstants& c, const ExteriorForm& xi);
ExteriorForm ce_differential(const LieAlgebra& g, const ExteriorForm& xi);

bool is_closed(const LieAlgebra& g, const OneForm& w);

// Throws NonClosedForm if dw != 0, InvalidArgument on dimension mismatch.
void require_closed(const LieAlgebra& g, const OneForm& w);

// d_w(xi) = d(xi) + w ^ xi, for closed w.
ExteriorForm deformed_differential(const LieAlgebra& g, const OneForm& w, const ExteriorForm& xi);

// Matrix of xi -> d(xi) + eta ^ xi on Lambda^p, with no closedness or Jacobi
// precondition. Shape C(n, p+1) x C(n, p).
RationalMatrix twisted_differential_matrix(const StructureConstants& c, const OneForm& eta, std::size_t p);

// The complex (Lambda^*(g*), d_w) as one matrix per degree p = 0..n-1.
class DifferentialMatrices {
 public:
  DifferentialMatrices(std::size_t dim, OneForm omega, std::vector<RationalMatrix> matrices)
      : dim_(dim), omega_(std::move(omega)), matrices_(std::move(matrices)) {}

  std::size_t dim() const noexcept { return dim_; }
  const OneForm& omega() const noexcept { return omega_; }

  // d_w : Lambda^p -> Lambda^{p+1} for 0 <= p < n.
  const RationalMatrix& degree(std::size_t p) const { return matrices_.at(p); }
  const std::vector<RationalMatrix>& all() const& noexcept { return matrices_; }
  std::vector<RationalMatrix> all() && noexcept { return std::move(matrices_); }

 private:
  std::size_t dim_;
  OneForm omega_;
  std::vector<RationalMatrix> matrices_;
};

// Throws NonClosedForm.
DifferentialMatrices differential_matrices(const LieAlgebra& g, const OneForm& w);

}  // namespace liecoh
