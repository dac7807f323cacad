#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liecoh/errors.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/rational.hpp"

// Lie algebras given by structure constants [e_i, e_j] = sum_k C_ij^k e_k.
//
// Indices are 0-based throughout the C++ API. Everything user-facing (JSON,
// CLI, printed forms) uses the 1-based e_1..e_n convention.
namespace liecoh {

struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector coeffs;  // coordinates of [e_i, e_j]
};

// Raw, unvalidated input. Omitted brackets are zero; an entry with i > j is
// read as [e_j, e_i] = -coeffs.
struct StructureTable {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;  // empty means e1..en
  std::vector<BracketEntry> brackets;
};

// Shape-checked, antisymmetric structure-constant tensor. Jacobi is not
// assumed, so this type can carry a deliberately broken bracket.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim);

  // Throws StructureError on dim = 0, wrong vector lengths, out-of-range,
  // diagonal or duplicate index pairs.
  static StructureConstants from_table(const StructureTable& table);

  std::size_t dim() const noexcept { return dim_; }

  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  // Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const Vector& v);
  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;

  // Matrix of ad(e_i): column a holds [e_i, e_a].
  RationalMatrix ad(std::size_t i) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
};

struct JacobiDefect {
  std::size_t i, j, k;  // i < j < k
  Vector defect;        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct ValidationReport {
  std::vector<JacobiDefect> defects;
  bool ok() const noexcept { return defects.empty(); }
};

// All failing triples, not just the first.
ValidationReport jacobi_defects(const StructureConstants& c);

// Throws StructureError for malformed tables; Jacobi failures are reported,
// not thrown.
ValidationReport validate_lie_algebra(const StructureTable& table);

class JacobiError : public InputError {
 public:
  explicit JacobiError(std::vector<JacobiDefect> defects);
  const std::vector<JacobiDefect>& defects() const noexcept { return defects_; }

 private:
  std::vector<JacobiDefect> defects_;
};

class LieAlgebra {
 public:
  // Both factories validate and throw StructureError / JacobiError.
  static LieAlgebra create(const StructureTable& table);
  static LieAlgebra create(StructureConstants constants, std::vector<std::string> names = {});

  std::size_t dim() const noexcept { return constants_.dim(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }
  const StructureConstants& constants() const noexcept { return constants_; }

  const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_(i, j, k);
  }
  Vector bracket(std::size_t i, std::size_t j) const { return constants_.bracket(i, j); }
  RationalMatrix ad(std::size_t i) const { return constants_.ad(i); }

  // Nonzero brackets with i < j, in lexicographic order.
  StructureTable table() const;

 private:
  LieAlgebra(StructureConstants c, std::vector<std::string> names)
      : constants_(std::move(c)), names_(std::move(names)) {}

  StructureConstants constants_;
  std::vector<std::string> names_;
};

// A 1-form in the dual basis e^1..e^n.
struct OneForm {
  Vector coeffs;

  OneForm() = default;
  explicit OneForm(std::size_t dim) : coeffs(dim) {}
  explicit OneForm(Vector c) : coeffs(std::move(c)) {}

  static OneForm basis(std::size_t dim, std::size_t i) {
    OneForm f(dim);
    f.coeffs[i] = 1;
    return f;
  }

  std::size_t dim() const noexcept { return coeffs.size(); }
  bool is_zero() const { return liecoh::is_zero(coeffs); }
  Rational operator()(std::span<const Rational> x) const;

  OneForm& operator+=(const OneForm& o);
  friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
  friend OneForm operator-(const OneForm& a);
  friend OneForm operator-(const OneForm& a, const OneForm& b) { return a + (-b); }
  friend OneForm operator*(const Rational& s, const OneForm& a);
  friend bool operator==(const OneForm&, const OneForm&) = default;
  friend bool operator<(const OneForm& a, const OneForm& b) { return a.coeffs < b.coeffs; }
};

std::string to_string(const OneForm& f);

// Subspace of Q^n stored as the nonzero rows of a reduced row echelon form,
// so equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vector>& basis() const& noexcept { return basis_; }
  std::vector<Vector> basis() && noexcept { return std::move(basis_); }
  bool contains(std::span<const Rational> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> basis_;
};

Subspace derived_subalgebra(const LieAlgebra& g);

// Annihilator of [g,g] in the dual space: the closed 1-forms.
Subspace closed_one_forms(const LieAlgebra& g);

enum class AlgebraClass { abelian, nilpotent, solvable, non_solvable };
std::string_view to_string(AlgebraClass c);

// Most specific class: abelian, else nilpotent, else solvable.
AlgebraClass classify(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);

bool is_unimodular(const LieAlgebra& g);

// New basis f_a = sum_b M(b,a) e_b, i.e. the columns of M are the new basis
// vectors in old coordinates. Throws SingularMatrix.
LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& m);

// Coordinates of a 1-form in the dual of the basis produced by change_basis:
// (M^T w)_a = w(f_a).
OneForm transform_one_form(const OneForm& w, const RationalMatrix& m);

}  // namespace liecoh
