#include "liecoh/exterior.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace liecoh {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<IndexTuple> exterior_basis(std::size_t dim, std::size_t degree) {
  std::vector<IndexTuple> out;
  if (degree > dim) return out;
  IndexTuple t(degree);
  for (std::size_t i = 0; i < degree; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    // Advance to the next combination in lexicographic order.
    std::size_t i = degree;
    while (i > 0 && t[i - 1] == dim - degree + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < degree; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::size_t basis_index(std::size_t dim, const IndexTuple& t) {
  // Count the tuples that precede t lexicographically.
  const std::size_t p = t.size();
  std::size_t index = 0;
  std::size_t lo = 0;
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t v = lo; v < t[r]; ++v) index += binomial(dim - v - 1, p - r - 1);
    lo = t[r] + 1;
  }
  return index;
}

namespace {

// Sorts `seq` in place and returns the sign of the permutation, or nullopt if
// an index repeats (the wedge monomial vanishes).
std::optional<int> sort_with_sign(IndexTuple& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return std::nullopt;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

bool is_strictly_increasing(const IndexTuple& t) {
  return std::adjacent_find(t.begin(), t.end(), std::greater_equal<>()) == t.end();
}

struct GeneratorTerm {
  std::size_t a, b;  // a < b
  Rational coeff;
};

// de^k for every generator k, as a list of e^a^e^b terms.
std::vector<std::vector<GeneratorTerm>> generator_differentials(const StructureConstants& c) {
  const std::size_t n = c.dim();
  std::vector<std::vector<GeneratorTerm>> out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        if (c(a, b, k) != 0) out[k].push_back({a, b, -c(a, b, k)});
      }
  return out;
}

// d(xi) + eta ^ xi using precomputed generator differentials.
ExteriorForm apply_twisted(const std::vector<std::vector<GeneratorTerm>>& gen, const OneForm& eta,
                           const ExteriorForm& xi) {
  const std::size_t n = xi.dim();
  ExteriorForm out(n, xi.degree() + 1);
  if (xi.degree() >= n) return out;
  IndexTuple seq;
  for (const auto& [t, coeff] : xi.terms()) {
    for (std::size_t r = 0; r < t.size(); ++r) {
      const Rational positional = (r % 2 == 0) ? coeff : Rational(-coeff);
      for (const GeneratorTerm& g : gen[t[r]]) {
        seq.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(r));
        seq.push_back(g.a);
        seq.push_back(g.b);
        seq.insert(seq.end(), t.begin() + static_cast<std::ptrdiff_t>(r) + 1, t.end());
        if (auto sign = sort_with_sign(seq)) {
          out.add_term(seq, *sign > 0 ? Rational(positional * g.coeff) : Rational(-positional * g.coeff));
        }
      }
    }
    for (std::size_t i = 0; i < eta.coeffs.size(); ++i) {
      if (eta.coeffs[i] == 0) continue;
      seq.assign(1, i);
      seq.insert(seq.end(), t.begin(), t.end());
      if (auto sign = sort_with_sign(seq)) {
        out.add_term(seq, *sign > 0 ? Rational(eta.coeffs[i] * coeff) : Rational(-eta.coeffs[i] * coeff));
      }
    }
  }
  return out;
}

}  // namespace

// --- ExteriorForm --------------------------------------------------------------

ExteriorForm ExteriorForm::scalar(std::size_t dim, const Rational& value) {
  ExteriorForm f(dim, 0);
  f.add_term({}, value);
  return f;
}

ExteriorForm ExteriorForm::monomial(std::size_t dim, IndexTuple indices, const Rational& coeff) {
  if (!is_strictly_increasing(indices)) throw InvalidArgument("monomial indices must be strictly increasing");
  if (!indices.empty() && indices.back() >= dim) throw InvalidArgument("monomial index out of range");
  ExteriorForm f(dim, indices.size());
  f.add_term(indices, coeff);
  return f;
}

ExteriorForm ExteriorForm::from_one_form(const OneForm& w) {
  ExteriorForm f(w.dim(), 1);
  for (std::size_t i = 0; i < w.dim(); ++i) f.add_term({i}, w.coeffs[i]);
  return f;
}

ExteriorForm ExteriorForm::from_coordinates(std::size_t dim, std::size_t degree,
                                            std::span<const Rational> coords) {
  const auto basis = exterior_basis(dim, degree);
  if (coords.size() != basis.size()) throw InvalidArgument("coordinate vector has wrong length");
  ExteriorForm f(dim, degree);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coords[i]);
  return f;
}

Rational ExteriorForm::coefficient(const IndexTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExteriorForm::add_term(const IndexTuple& t, const Rational& coeff) {
  if (coeff == 0) return;
  if (t.size() != degree_) throw InvalidArgument("term degree does not match form degree");
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Vector ExteriorForm::coordinates() const {
  Vector v(binomial(dim_, degree_));
  for (const auto& [t, q] : terms_) v[basis_index(dim_, t)] = q;
  return v;
}

void ExteriorForm::check_compatible(const ExteriorForm& o) const {
  if (o.dim_ != dim_ || o.degree_ != degree_) {
    throw InvalidArgument("adding forms of different dimension or degree");
  }
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  check_compatible(o);
  for (const auto& [t, q] : o.terms_) add_term(t, q);
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) {
  check_compatible(o);
  for (const auto& [t, q] : o.terms_) add_term(t, -q);
  return *this;
}

ExteriorForm operator-(const ExteriorForm& a) { return Rational(-1) * a; }

ExteriorForm operator*(const Rational& s, const ExteriorForm& a) {
  ExteriorForm r(a.dim_, a.degree_);
  if (s == 0) return r;
  for (const auto& [t, q] : a.terms_) r.terms_.emplace(t, s * q);
  return r;
}

std::string to_string(const ExteriorForm& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, q] : f.terms()) {
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (t.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t r = 0; r < t.size(); ++r) os << (r ? "^" : "") << "e" << t[r] + 1;
  }
  return os.str();
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.dim() != b.dim()) throw InvalidArgument("wedge of forms over different dimensions");
  ExteriorForm out(a.dim(), a.degree() + b.degree());
  if (out.degree() > a.dim()) return out;
  IndexTuple seq;
  for (const auto& [ta, qa] : a.terms()) {
    for (const auto& [tb, qb] : b.terms()) {
      seq = ta;
      seq.insert(seq.end(), tb.begin(), tb.end());
      if (auto sign = sort_with_sign(seq)) {
        out.add_term(seq, *sign > 0 ? Rational(qa * qb) : Rational(-qa * qb));
      }
    }
  }
  return out;
}

// --- differentials -------------------------------------------------------------

ExteriorForm ce_differential(const StructureConstants& c, const ExteriorForm& xi) {
  if (xi.dim() != c.dim()) throw InvalidArgument("form dimension does not match algebra");
  return apply_twisted(generator_differentials(c), OneForm(c.dim()), xi);
}

ExteriorForm ce_differential(const LieAlgebra& g, const ExteriorForm& xi) {
  return ce_differential(g.constants(), xi);
}

bool is_closed(const LieAlgebra& g, const OneForm& w) {
  if (w.dim() != g.dim()) throw InvalidArgument("1-form dimension does not match algebra");
  return ce_differential(g, ExteriorForm::from_one_form(w)).is_zero();
}

void require_closed(const LieAlgebra& g, const OneForm& w) {
  if (!is_closed(g, w)) {
    throw NonClosedForm("the 1-form " + to_string(w) + " is not closed (d omega = " +
                        to_string(ce_differential(g, ExteriorForm::from_one_form(w))) + ")");
  }
}

ExteriorForm deformed_differential(const LieAlgebra& g, const OneForm& w, const ExteriorForm& xi) {
  require_closed(g, w);
  if (xi.dim() != g.dim()) throw InvalidArgument("form dimension does not match algebra");
  return apply_twisted(generator_differentials(g.constants()), w, xi);
}

RationalMatrix twisted_differential_matrix(const StructureConstants& c, const OneForm& eta, std::size_t p) {
  const std::size_t n = c.dim();
  if (eta.dim() != n) throw InvalidArgument("1-form dimension does not match algebra");
  const auto gen = generator_differentials(c);
  const auto cols = exterior_basis(n, p);
  RationalMatrix m(binomial(n, p + 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const ExteriorForm image = apply_twisted(gen, eta, ExteriorForm::monomial(n, cols[j]));
    for (const auto& [t, q] : image.terms()) m(basis_index(n, t), j) = q;
  }
  return m;
}

DifferentialMatrices differential_matrices(const LieAlgebra& g, const OneForm& w) {
  require_closed(g, w);
  std::vector<RationalMatrix> mats;
  for (std::size_t p = 0; p < g.dim(); ++p) {
    mats.push_back(twisted_differential_matrix(g.constants(), w, p));
  }
  return DifferentialMatrices(g.dim(), w, std::move(mats));
}

}  // namespace liecoh
