#include "liecoh/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace liecoh {

// --- StructureConstants ------------------------------------------------------

StructureConstants::StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

StructureConstants StructureConstants::from_table(const StructureTable& table) {
  const std::size_t n = table.dim;
  if (n == 0) throw StructureError("dimension must be at least 1");
  if (!table.basis_names.empty() && table.basis_names.size() != n) {
    throw StructureError("expected " + std::to_string(n) + " basis names, got " +
                         std::to_string(table.basis_names.size()));
  }
  StructureConstants c(n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < table.brackets.size(); ++e) {
    const BracketEntry& b = table.brackets[e];
    const std::string where = "bracket #" + std::to_string(e + 1);
    if (b.i >= n || b.j >= n) throw StructureError(where + ": index out of range");
    if (b.i == b.j) throw StructureError(where + ": [e_i, e_i] cannot be prescribed");
    if (b.coeffs.size() != n) {
      throw StructureError(where + ": coefficient vector has length " +
                           std::to_string(b.coeffs.size()) + ", expected " + std::to_string(n));
    }
    auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second) throw StructureError(where + ": duplicate bracket");
    c.set_bracket(b.i, b.j, b.coeffs);
  }
  return c;
}

void StructureConstants::set_bracket(std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < dim_; ++k) {
    c_[(i * dim_ + j) * dim_ + k] = v[k];
    c_[(j * dim_ + i) * dim_ + k] = -v[k];
  }
}

Vector StructureConstants::bracket(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

Vector StructureConstants::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0 || i == j) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k) != 0) out[k] += s * (*this)(i, j, k);
      }
    }
  }
  return out;
}

RationalMatrix StructureConstants::ad(std::size_t i) const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t k = 0; k < dim_; ++k) m(k, a) = (*this)(i, a, k);
  return m;
}

// --- Jacobi ------------------------------------------------------------------

ValidationReport jacobi_defects(const StructureConstants& c) {
  const std::size_t n = c.dim();
  auto double_bracket = [&](std::size_t a, std::size_t b, std::size_t d, Vector& acc) {
    // [[e_a, e_b], e_d] = sum_l C_ab^l [e_l, e_d]
    for (std::size_t l = 0; l < n; ++l) {
      if (c(a, b, l) == 0) continue;
      for (std::size_t m = 0; m < n; ++m) {
        if (c(l, d, m) != 0) acc[m] += c(a, b, l) * c(l, d, m);
      }
    }
  };

  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector acc(n);
        double_bracket(i, j, k, acc);
        double_bracket(j, k, i, acc);
        double_bracket(k, i, j, acc);
        if (!is_zero(acc)) report.defects.push_back({i, j, k, std::move(acc)});
      }
  return report;
}

ValidationReport validate_lie_algebra(const StructureTable& table) {
  return jacobi_defects(StructureConstants::from_table(table));
}

namespace {

std::string describe_defects(const std::vector<JacobiDefect>& defects) {
  std::ostringstream os;
  os << "Jacobi identity fails for " << defects.size() << " triple(s):";
  for (const auto& d : defects) {
    os << " (" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1 << ")";
  }
  return os.str();
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

}  // namespace

JacobiError::JacobiError(std::vector<JacobiDefect> defects)
    : InputError(describe_defects(defects)), defects_(std::move(defects)) {}

// --- LieAlgebra --------------------------------------------------------------

LieAlgebra LieAlgebra::create(const StructureTable& table) {
  return create(StructureConstants::from_table(table), table.basis_names);
}

LieAlgebra LieAlgebra::create(StructureConstants constants, std::vector<std::string> names) {
  if (constants.dim() == 0) throw StructureError("dimension must be at least 1");
  if (names.empty()) names = default_names(constants.dim());
  if (names.size() != constants.dim()) throw StructureError("basis name count does not match dimension");
  ValidationReport report = jacobi_defects(constants);
  if (!report.ok()) throw JacobiError(std::move(report.defects));
  return LieAlgebra(std::move(constants), std::move(names));
}

StructureTable LieAlgebra::table() const {
  StructureTable t{dim(), names_, {}};
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      Vector v = bracket(i, j);
      if (!is_zero(v)) t.brackets.push_back({i, j, std::move(v)});
    }
  return t;
}

// --- OneForm -----------------------------------------------------------------

Rational OneForm::operator()(std::span<const Rational> x) const {
  if (x.size() != coeffs.size()) throw InvalidArgument("1-form evaluated on a vector of wrong length");
  Rational acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * x[i];
  return acc;
}

OneForm& OneForm::operator+=(const OneForm& o) {
  if (o.dim() != dim()) throw InvalidArgument("1-form dimension mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

OneForm operator-(const OneForm& a) {
  OneForm r = a;
  for (auto& q : r.coeffs) q = -q;
  return r;
}

OneForm operator*(const Rational& s, const OneForm& a) {
  OneForm r = a;
  for (auto& q : r.coeffs) q *= s;
  return r;
}

std::string to_string(const OneForm& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const Rational& q = f.coeffs[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (out.empty()) {
      if (q < 0) out += "-";
    } else {
      out += q < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "e^" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// --- Subspace ----------------------------------------------------------------

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  const RowEchelon e = row_reduce(RationalMatrix::from_rows(vectors, ambient_dim));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    auto row = e.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) return false;
  if (basis_.empty()) return is_zero(v);
  std::vector<Vector> rows = basis_;
  rows.emplace_back(v.begin(), v.end());
  return rank(RationalMatrix::from_rows(rows)) == basis_.size();
}

// --- structure -----------------------------------------------------------------

namespace {

// span{[x, y] : x in a, y in b} for subspaces a, b.
Subspace bracket_span(const LieAlgebra& g, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  std::vector<Vector> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Vector v = g.constants().bracket(x, y);
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  return Subspace::span(g.dim(), out);
}

std::vector<Vector> standard_basis(std::size_t n) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v(n);
    v[i] = 1;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Subspace derived_subalgebra(const LieAlgebra& g) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Vector v = g.bracket(i, j);
      if (!is_zero(v)) out.push_back(std::move(v));
    }
  return Subspace::span(g.dim(), out);
}

Subspace closed_one_forms(const LieAlgebra& g) {
  const Subspace derived = derived_subalgebra(g);
  return Subspace::span(g.dim(),
                        kernel_basis(RationalMatrix::from_rows(derived.basis(), g.dim())));
}

bool is_solvable(const LieAlgebra& g) {
  Subspace current = Subspace::span(g.dim(), standard_basis(g.dim()));
  while (current.dim() > 0) {
    Subspace next = bracket_span(g, current.basis(), current.basis());
    if (next.dim() == current.dim()) return false;
    current = std::move(next);
  }
  return true;
}

bool is_nilpotent(const LieAlgebra& g) {
  const std::vector<Vector> all = standard_basis(g.dim());
  Subspace current = Subspace::span(g.dim(), all);
  while (current.dim() > 0) {
    Subspace next = bracket_span(g, all, current.basis());
    if (next.dim() == current.dim()) return false;
    current = std::move(next);
  }
  return true;
}

AlgebraClass classify(const LieAlgebra& g) {
  if (derived_subalgebra(g).dim() == 0) return AlgebraClass::abelian;
  if (is_nilpotent(g)) return AlgebraClass::nilpotent;
  if (is_solvable(g)) return AlgebraClass::solvable;
  return AlgebraClass::non_solvable;
}

std::string_view to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::abelian: return "abelian";
    case AlgebraClass::nilpotent: return "nilpotent";
    case AlgebraClass::solvable: return "solvable";
    case AlgebraClass::non_solvable: return "non_solvable";
  }
  return "unknown";
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Rational trace = 0;
    for (std::size_t k = 0; k < g.dim(); ++k) trace += g.structure_constant(i, k, k);
    if (trace != 0) return false;
  }
  return true;
}

LieAlgebra change_basis(const LieAlgebra& g, const RationalMatrix& m) {
  const std::size_t n = g.dim();
  if (m.rows() != n || m.cols() != n) throw InvalidArgument("change_basis: matrix must be n x n");
  auto inv = inverse(m);
  if (!inv) throw SingularMatrix("change_basis: matrix is singular");

  StructureConstants c(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      // [f_a, f_b] in old coordinates, then expressed in the new basis.
      Vector old = g.constants().bracket(m.column(a), m.column(b));
      c.set_bracket(a, b, inv->apply(old));
    }
  return LieAlgebra::create(std::move(c), g.basis_names());
}

OneForm transform_one_form(const OneForm& w, const RationalMatrix& m) {
  if (m.rows() != w.dim()) throw InvalidArgument("transform_one_form: dimension mismatch");
  return OneForm(m.transpose().apply(w.coeffs));
}

}  // namespace liecoh
