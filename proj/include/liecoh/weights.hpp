#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "liecoh/algebra.hpp"

namespace liecoh {

// Basis adapted to a flag of ad-invariant subspaces of [g,g]. In its dual
// basis, de^i = 0 for i <= k and de^i = alpha_i ^ e^i + (terms in e^1..e^{i-1})
// for i > k.
struct WeightData {
  // Columns are the adapted basis vectors in original coordinates. The first
  // k span a complement of [g,g]; the last one spans an ad-invariant line.
  RationalMatrix adapted_change;
  // alpha_1..alpha_n in the original dual basis; alpha_1 = ... = alpha_k = 0.
  std::vector<OneForm> weights;
  std::size_t closed_block = 0;  // k = b^1(g)

  std::size_t dim() const noexcept { return weights.size(); }
};

// Throws NotSolvable, or NotRationallyTriangularizable when some step of the
// flag has no common eigenvector with rational eigenvalues.
//
// Each step searches for a common eigenvector of all ad(e_j) on the current
// quotient of [g,g]: generators are taken in order, candidate eigenvalues are
// the rational roots of the characteristic polynomial in ascending order, and
// eigenspaces are intersected with backtracking. The first basis vector of the
// surviving intersection is chosen.
WeightData adapted_basis(const LieAlgebra& g);

// Nonempty subset sums of the weights, deduplicated.
struct OmegaSet {
  std::set<OneForm> elements;

  bool contains(const OneForm& w) const { return elements.count(w) != 0; }
  std::size_t size() const noexcept { return elements.size(); }
};

OmegaSet omega_set(const WeightData& w);
OmegaSet omega_set(const std::vector<OneForm>& weights);

enum class Vanishing { guaranteed_trivial, possibly_nontrivial };

// guaranteed_trivial iff -w is not in the omega set. Throws NonClosedForm if w
// does not vanish on [g,g].
Vanishing vanishing_predicate(const WeightData& data, const OneForm& w);

// Diagonal of the leading term of the deformed Laplacian on Lambda^p:
// |alpha_{i1} + ... + alpha_{ip} + w|^2 for every p-subset in lexicographic
// order, with the adapted dual basis taken as orthonormal.
std::vector<Rational> r0_spectrum(const WeightData& data, const OneForm& w, std::size_t p);

// True iff the weights sum to zero.
bool weight_sum_check(const WeightData& data);

// Distinct rational roots, ascending. Coefficients are lowest degree first.
std::vector<Rational> rational_roots(const Vector& poly);

}  // namespace liecoh
