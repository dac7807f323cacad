#include "liecoh/report.hpp"

#include <algorithm>

#include "liecoh/cohomology.hpp"
#include "liecoh/exterior.hpp"
#include "liecoh/weights.hpp"

namespace liecoh {

namespace {

// lambda with -lambda * direction == sigma, if sigma is parallel to direction.
std::optional<Rational> solve_on_line(const OneForm& direction, const OneForm& sigma) {
  std::size_t lead = 0;
  while (direction.coeffs[lead] == 0) ++lead;
  Rational lambda = -sigma.coeffs[lead] / direction.coeffs[lead];
  if ((-lambda) * direction == sigma) return lambda;
  return std::nullopt;
}

}  // namespace

ScanTable scan_line(const LieAlgebra& g, const OneForm& direction) {
  if (direction.dim() != g.dim()) throw InvalidArgument("direction dimension does not match algebra");
  if (direction.is_zero()) throw InvalidArgument("scan direction must be nonzero");
  require_closed(g, direction);
  const OmegaSet omega = omega_set(adapted_basis(g));

  ScanTable table{direction, {Rational(0)}, {}};
  for (const OneForm& sigma : omega.elements) {
    if (auto lambda = solve_on_line(direction, sigma)) table.critical_lambdas.push_back(*lambda);
  }
  auto& crit = table.critical_lambdas;
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  Rational bound = 0;
  for (const auto& lambda : crit) {
    table.rows.push_back({lambda, betti_numbers(g, lambda * direction), false});
    if (abs(lambda) > bound) bound = abs(lambda);
  }
  const Rational generic = bound + 1;
  table.rows.push_back({generic, betti_numbers(g, generic * direction), true});
  return table;
}

bool NovikovReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::holds; });
}

NovikovReport novikov_report(const LieAlgebra& g, const OneForm& omega, const Rational& lambda,
                             const std::vector<std::size_t>& morse_counts) {
  if (morse_counts.size() != g.dim() + 1) {
    throw InvalidArgument("expected " + std::to_string(g.dim() + 1) + " Morse counts, got " +
                          std::to_string(morse_counts.size()));
  }
  require_closed(g, omega);
  const OneForm scaled = lambda * omega;

  NovikovReport r{omega, lambda, betti_numbers(g, scaled), morse_counts, {}, std::nullopt, {}};
  for (std::size_t p = 0; p < r.betti.size(); ++p) {
    r.verdicts.push_back(morse_counts[p] >= r.betti[p] ? Verdict::holds : Verdict::violated);
  }

  try {
    r.critical = omega_set(adapted_basis(g)).contains(-scaled);
  } catch (const DomainError& e) {
    r.notes.push_back(std::string("critical-value check unavailable: ") + e.what());
  }
  r.notes.push_back("the inequality m_p >= b_p(lambda, omega) is only guaranteed for sufficiently "
                    "large lambda; no bound is claimed here");
  if (r.critical.value_or(false)) {
    r.notes.push_back("lambda is a critical value: -lambda*omega lies in the weight-sum set");
  }
  return r;
}

}  // namespace liecoh
