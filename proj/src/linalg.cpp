#include "liecoh/linalg.hpp"

#include <algorithm>
#include <utility>

#include "liecoh/errors.hpp"

namespace liecoh {

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged rows in matrix construction");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  if (!cols.empty()) rows = cols.front().size();
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidArgument("ragged columns in matrix construction");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector RationalMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] != 0 && (*this)(r, c) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

bool RationalMatrix::is_zero() const { return liecoh::is_zero(data_); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators. Row scaling preserves the
// row space, so rank, kernel and pivot structure are unchanged.
IntegerRows integer_rows(const RationalMatrix& m) {
  IntegerRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (const Rational& q : m.row(r)) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      rows[r][c] = q.get_num() * (scale / q.get_den());
    }
  }
  return rows;
}

std::optional<std::size_t> find_pivot(const IntegerRows& a, std::size_t from, std::size_t col) {
  for (std::size_t r = from; r < a.size(); ++r) {
    if (a[r][col] != 0) return r;
  }
  return std::nullopt;
}

// a[i][j] <- (p * a[i][j] - a[i][c] * a[r][j]) / prev, exact.
void bareiss_update(std::vector<Integer>& target, const std::vector<Integer>& pivot_row,
                    std::size_t c, const Integer& prev) {
  const Integer p = pivot_row[c];
  const Integer f = target[c];
  Integer tmp;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (j == c) continue;
    tmp = p * target[j] - f * pivot_row[j];
    mpz_divexact(target[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
  }
  target[c] = 0;
}

}  // namespace

RowEchelon row_reduce(const RationalMatrix& m) {
  IntegerRows a = integer_rows(m);
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    auto p = find_pivot(a, r, c);
    if (!p) continue;
    std::swap(a[r], a[*p]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r) bareiss_update(a[i], a[r], c, prev);
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Every pivot entry now equals `prev`; dividing through gives the RREF.
  RowEchelon out{RationalMatrix(m.rows(), cols), std::move(pivots)};
  for (std::size_t i = 0; i < out.pivot_columns.size(); ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (a[i][c] != 0) {
        Rational q(a[i][c], prev);
        q.canonicalize();
        out.reduced(i, c) = q;
      }
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  IntegerRows a = integer_rows(m);
  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    auto p = find_pivot(a, r, c);
    if (!p) continue;
    std::swap(a[r], a[*p]);
    const Integer pivot = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        tmp = pivot * a[i][j] - f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::vector<Vector> kernel_basis(const RationalMatrix& m) {
  const RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.reduced(i, f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> in_image(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.rows()) throw InvalidArgument("in_image: vector length must equal row count");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = v[r];
  }
  const RowEchelon e = row_reduce(aug);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == m.cols()) return std::nullopt;
  Vector u(m.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    u[e.pivot_columns[i]] = e.reduced(i, m.cols());
  }
  return u;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = row_reduce(aug);
  if (e.rank() < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Vector characteristic_polynomial(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: M_k = A·M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A·M_k)/k.
  const std::size_t n = m.rows();
  Vector c(n + 1);
  c[n] = 1;
  RationalMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    RationalMatrix am = m * mk;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return c;
}

}  // namespace liecoh
