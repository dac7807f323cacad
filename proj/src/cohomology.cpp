#include "liecoh/cohomology.hpp"

namespace liecoh {

namespace {

// Betti numbers from ranks: b^p = dim ker d_p - rank d_{p-1}.
std::vector<std::size_t> betti_from(const DifferentialMatrices& d) {
  const std::size_t n = d.dim();
  std::vector<std::size_t> ranks(n + 1, 0);  // ranks[p] = rank of d_p, d_n = 0
  for (std::size_t p = 0; p < n; ++p) ranks[p] = rank(d.degree(p));
  std::vector<std::size_t> betti(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    const std::size_t kernel = binomial(n, p) - ranks[p];
    betti[p] = kernel - (p == 0 ? 0 : ranks[p - 1]);
  }
  return betti;
}

std::vector<ExteriorForm> representatives_from(const DifferentialMatrices& d, std::size_t p) {
  const std::size_t n = d.dim();
  const std::size_t width = binomial(n, p);

  std::vector<Vector> kernel;
  if (p < n) {
    kernel = kernel_basis(d.degree(p));
  } else {
    for (std::size_t i = 0; i < width; ++i) {
      Vector v(width);
      v[i] = 1;
      kernel.push_back(std::move(v));
    }
  }

  std::vector<Vector> span;  // image columns, then accepted representatives
  if (p > 0) {
    const RationalMatrix& prev = d.degree(p - 1);
    for (std::size_t c = 0; c < prev.cols(); ++c) {
      Vector col = prev.column(c);
      if (!is_zero(col)) span.push_back(std::move(col));
    }
  }
  std::size_t current_rank = span.empty() ? 0 : rank(RationalMatrix::from_rows(span, width));

  std::vector<ExteriorForm> reps;
  for (Vector& z : kernel) {
    span.push_back(z);
    const std::size_t r = rank(RationalMatrix::from_rows(span, width));
    if (r > current_rank) {
      current_rank = r;
      reps.push_back(ExteriorForm::from_coordinates(n, p, z));
    } else {
      span.pop_back();
    }
  }
  return reps;
}

}  // namespace

CohomologyResult compute_cohomology(const LieAlgebra& g, const OneForm& w) {
  const DifferentialMatrices d = differential_matrices(g, w);
  CohomologyResult r{w, betti_from(d), {}};
  for (std::size_t p = 0; p <= g.dim(); ++p) r.representatives.push_back(representatives_from(d, p));
  return r;
}

std::vector<std::size_t> betti_numbers(const LieAlgebra& g, const OneForm& w) {
  return betti_from(differential_matrices(g, w));
}

std::vector<ExteriorForm> representatives(const LieAlgebra& g, const OneForm& w, std::size_t p) {
  if (p > g.dim()) throw InvalidArgument("degree exceeds algebra dimension");
  return representatives_from(differential_matrices(g, w), p);
}

bool is_cocycle(const LieAlgebra& g, const OneForm& w, const ExteriorForm& xi) {
  return deformed_differential(g, w, xi).is_zero();
}

std::optional<ExteriorForm> is_coboundary(const LieAlgebra& g, const OneForm& w, const ExteriorForm& xi) {
  require_closed(g, w);
  if (xi.dim() != g.dim()) throw InvalidArgument("form dimension does not match algebra");
  const std::size_t p = xi.degree();
  if (p > g.dim()) return ExteriorForm(g.dim(), p - 1);
  if (p == 0) {
    if (xi.is_zero()) return ExteriorForm(g.dim(), 0);
    return std::nullopt;
  }
  const RationalMatrix m = twisted_differential_matrix(g.constants(), w, p - 1);
  auto pre = in_image(m, xi.coordinates());
  if (!pre) return std::nullopt;
  return ExteriorForm::from_coordinates(g.dim(), p - 1, *pre);
}

long euler_characteristic(const std::vector<std::size_t>& betti) {
  long chi = 0;
  for (std::size_t p = 0; p < betti.size(); ++p) {
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(betti[p]);
  }
  return chi;
}

long euler_characteristic(const CohomologyResult& r) { return euler_characteristic(r.betti); }

}  // namespace liecoh
