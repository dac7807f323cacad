#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liecoh/algebra.hpp"
#include "liecoh/exterior.hpp"

namespace liecoh {

// H^*_w(g): cohomology of (Lambda^*(g*), d + w^) for a closed 1-form w.
struct CohomologyResult {
  OneForm omega;
  std::vector<std::size_t> betti;                         // b^0..b^n
  std::vector<std::vector<ExteriorForm>> representatives;  // b^p cocycles per degree
};

// All entry points below throw NonClosedForm when dw != 0.

CohomologyResult compute_cohomology(const LieAlgebra& g, const OneForm& w);

std::vector<std::size_t> betti_numbers(const LieAlgebra& g, const OneForm& w);

// Kernel-basis vectors of d_w at degree p, in order, kept when they are
// independent of the image and of the ones already kept.
std::vector<ExteriorForm> representatives(const LieAlgebra& g, const OneForm& w, std::size_t p);

bool is_cocycle(const LieAlgebra& g, const OneForm& w, const ExteriorForm& xi);

// Some eta with d_w(eta) = xi. In degree 0 only xi = 0 qualifies and the
// returned primitive is the zero scalar.
std::optional<ExteriorForm> is_coboundary(const LieAlgebra& g, const OneForm& w, const ExteriorForm& xi);

long euler_characteristic(const CohomologyResult& r);
long euler_characteristic(const std::vector<std::size_t>& betti);

}  // namespace liecoh
