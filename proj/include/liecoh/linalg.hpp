#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

using Vector = std::vector<Rational>;

bool is_zero(std::span<const Rational> v);

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  // All rows must have the same length; `cols` is used when `rows` is empty.
  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static RationalMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  RationalMatrix transpose() const;
  Vector apply(std::span<const Rational> v) const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form. Rows past pivot_columns.size() are zero.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

// Fraction-free Gauss-Jordan elimination. Each row is first scaled to
// integers; elimination then stays in Z with exact Bareiss divisions and the
// pivot is always the first nonzero entry in column order.
RowEchelon row_reduce(const RationalMatrix& m);

// Forward-only Bareiss elimination.
std::size_t rank(const RationalMatrix& m);

// Null-space basis, one vector per free column in ascending order. The vector
// for free column f has a 1 in position f and zeros in the other free columns.
std::vector<Vector> kernel_basis(const RationalMatrix& m);

// Solution u of m·u = v with every free variable set to zero, or nullopt.
std::optional<Vector> in_image(const RationalMatrix& m, std::span<const Rational> v);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Coefficients c_0..c_n of det(x·I - m), lowest degree first (c_n = 1).
Vector characteristic_polynomial(const RationalMatrix& m);

}  // namespace liecoh
