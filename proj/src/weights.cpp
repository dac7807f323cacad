#include "liecoh/weights.hpp"

#include <algorithm>
#include <optional>

#include "liecoh/exterior.hpp"

namespace liecoh {

namespace {

std::vector<Integer> divisors(Integer a) {
  a = abs(a);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      Integer q = a / d;
      if (q != d) large.push_back(q);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate(const std::vector<Integer>& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

struct EigenChoice {
  Vector vector;
  Vector eigenvalues;  // one per generator
};

class CommonEigenSearch {
 public:
  explicit CommonEigenSearch(const std::vector<RationalMatrix>& ops) : ops_(ops) {
    for (const auto& op : ops_) roots_.push_back(rational_roots(characteristic_polynomial(op)));
  }

  std::optional<EigenChoice> run() {
    const std::size_t r = ops_.front().rows();
    Vector mus;
    return search(0, RationalMatrix::identity(r), mus);
  }

 private:
  // `space` holds a basis of the current intersection as columns.
  std::optional<EigenChoice> search(std::size_t j, const RationalMatrix& space, Vector& mus) {
    if (j == ops_.size()) return EigenChoice{space.column(0), mus};
    const RationalMatrix& op = ops_[j];
    for (const Rational& mu : roots_[j]) {
      RationalMatrix shifted = op;
      for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= mu;
      const auto coeffs = kernel_basis(shifted * space);
      if (coeffs.empty()) continue;
      std::vector<Vector> cols;
      for (const auto& c : coeffs) cols.push_back(space.apply(c));
      mus.push_back(mu);
      if (auto found = search(j + 1, RationalMatrix::from_columns(cols), mus)) return found;
      mus.pop_back();
    }
    return std::nullopt;
  }

  const std::vector<RationalMatrix>& ops_;
  std::vector<std::vector<Rational>> roots_;
};

}  // namespace

std::vector<Rational> rational_roots(const Vector& poly) {
  // Clear denominators.
  Integer scale = 1;
  for (const auto& q : poly) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> p;
  for (const auto& q : poly) p.push_back(q.get_num() * (scale / q.get_den()));
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.size() <= 1) return {};

  std::vector<Rational> roots;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (p.size() > 1) {
    const auto num = divisors(p.front());
    const auto den = divisors(p.back());
    for (const auto& a : num)
      for (const auto& b : den) {
        for (int sign : {1, -1}) {
          Rational x(sign * a, b);
          x.canonicalize();
          if (evaluate(p, x) == 0) roots.push_back(x);
        }
      }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

WeightData adapted_basis(const LieAlgebra& g) {
  if (!is_solvable(g)) throw NotSolvable("adapted basis requires a solvable Lie algebra");
  const std::size_t n = g.dim();
  const Subspace derived = derived_subalgebra(g);
  const std::size_t m = derived.dim();
  const std::size_t k = n - m;
  const auto& w = derived.basis();

  // RREF basis: the coordinate of v in [g,g] along w_a is v at w_a's pivot.
  std::vector<std::size_t> pivot(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t a = 0; a < m; ++a) {
    pivot[a] = static_cast<std::size_t>(
        std::find_if(w[a].begin(), w[a].end(), [](const Rational& q) { return q != 0; }) - w[a].begin());
    is_pivot[pivot[a]] = true;
  }
  auto to_ambient = [&](const Vector& x) {
    Vector v(n);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t i = 0; i < n; ++i) v[i] += x[a] * w[a][i];
    return v;
  };

  // ad(e_j) restricted to [g,g], in the w basis.
  std::vector<RationalMatrix> ops;
  for (std::size_t j = 0; j < n; ++j) {
    const RationalMatrix adj = g.ad(j);
    RationalMatrix a(m, m);
    for (std::size_t c = 0; c < m; ++c) {
      const Vector image = adj.apply(w[c]);
      for (std::size_t r = 0; r < m; ++r) a(r, c) = image[pivot[r]];
    }
    ops.push_back(std::move(a));
  }

  // Peel off common eigenvectors one quotient at a time. `lift` maps
  // coordinates on the current quotient back into the w basis.
  std::vector<Vector> flag;               // w-coordinates, innermost line first
  std::vector<OneForm> flag_weights;
  RationalMatrix lift = RationalMatrix::identity(m);
  while (!ops.empty() && ops.front().rows() > 0) {
    const std::size_t r = ops.front().rows();
    auto choice = CommonEigenSearch(ops).run();
    if (!choice) {
      throw NotRationallyTriangularizable(
          "adjoint action on [g,g] has no common eigenvector with rational eigenvalues "
          "at flag step " + std::to_string(flag.size() + 1));
    }
    flag.push_back(lift.apply(choice->vector));
    OneForm alpha(n);
    for (std::size_t j = 0; j < n; ++j) alpha.coeffs[j] = -choice->eigenvalues[j];
    flag_weights.push_back(std::move(alpha));

    // Quotient by the eigenline: basis P = [v | e_i for i != q].
    const Vector& v = choice->vector;
    const std::size_t q = static_cast<std::size_t>(
        std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; }) - v.begin());
    RationalMatrix p(r, r);
    for (std::size_t i = 0; i < r; ++i) p(i, 0) = v[i];
    RationalMatrix complement(r, r - 1);
    for (std::size_t i = 0, c = 1; i < r; ++i) {
      if (i == q) continue;
      p(i, c) = 1;
      complement(i, c - 1) = 1;
      ++c;
    }
    const RationalMatrix p_inv = *inverse(p);
    for (auto& op : ops) {
      const RationalMatrix conj = p_inv * op * p;
      RationalMatrix reduced(r - 1, r - 1);
      for (std::size_t a = 0; a + 1 < r; ++a)
        for (std::size_t b = 0; b + 1 < r; ++b) reduced(a, b) = conj(a + 1, b + 1);
      op = std::move(reduced);
    }
    lift = lift * complement;
  }

  WeightData data;
  data.closed_block = k;
  data.adapted_change = RationalMatrix(n, n);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_pivot[i]) continue;
    data.adapted_change(i, col++) = 1;
    data.weights.emplace_back(n);
  }
  for (std::size_t s = flag.size(); s-- > 0;) {
    const Vector v = to_ambient(flag[s]);
    for (std::size_t i = 0; i < n; ++i) data.adapted_change(i, col) = v[i];
    ++col;
    data.weights.push_back(flag_weights[s]);
  }
  return data;
}

OmegaSet omega_set(const std::vector<OneForm>& weights) {
  OmegaSet out;
  for (const OneForm& alpha : weights) {
    std::set<OneForm> next = out.elements;
    next.insert(alpha);
    for (const OneForm& s : out.elements) next.insert(s + alpha);
    out.elements = std::move(next);
  }
  return out;
}

OmegaSet omega_set(const WeightData& w) { return omega_set(w.weights); }

namespace {

void require_closed_on_flag(const WeightData& data, const OneForm& w) {
  if (w.dim() != data.dim()) throw InvalidArgument("1-form dimension does not match algebra");
  const OneForm adapted = transform_one_form(w, data.adapted_change);
  for (std::size_t i = data.closed_block; i < data.dim(); ++i) {
    if (adapted.coeffs[i] != 0) {
      throw NonClosedForm("the 1-form " + to_string(w) + " does not vanish on [g,g]");
    }
  }
}

}  // namespace

Vanishing vanishing_predicate(const WeightData& data, const OneForm& w) {
  require_closed_on_flag(data, w);
  return omega_set(data).contains(-w) ? Vanishing::possibly_nontrivial : Vanishing::guaranteed_trivial;
}

std::vector<Rational> r0_spectrum(const WeightData& data, const OneForm& w, std::size_t p) {
  require_closed_on_flag(data, w);
  const std::size_t n = data.dim();
  if (p > n) throw InvalidArgument("degree exceeds algebra dimension");
  std::vector<Rational> out;
  for (const IndexTuple& t : exterior_basis(n, p)) {
    OneForm sum = w;
    for (std::size_t i : t) sum += data.weights[i];
    const OneForm adapted = transform_one_form(sum, data.adapted_change);
    Rational norm = 0;
    for (const auto& c : adapted.coeffs) norm += c * c;
    out.push_back(norm);
  }
  return out;
}

bool weight_sum_check(const WeightData& data) {
  if (data.weights.empty()) return true;
  OneForm sum(data.dim());
  for (const auto& a : data.weights) sum += a;
  return sum.is_zero();
}

}  // namespace liecoh
