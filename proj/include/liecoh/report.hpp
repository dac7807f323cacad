#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liecoh/algebra.hpp"

namespace liecoh {

struct ScanRow {
  Rational lambda;
  std::vector<std::size_t> betti;
  bool generic = false;
};

// Cohomology along the line lambda * direction. Critical lambdas are those
// with -lambda * direction in the omega set, together with 0.
struct ScanTable {
  OneForm direction;
  std::vector<Rational> critical_lambdas;  // ascending
  std::vector<ScanRow> rows;               // critical rows, then the generic row
};

// Throws NonClosedForm, NotSolvable, NotRationallyTriangularizable, or
// InvalidArgument for a zero direction. The generic row uses
// 1 + max |critical lambda|.
ScanTable scan_line(const LieAlgebra& g, const OneForm& direction);

enum class Verdict { holds, violated };

struct NovikovReport {
  OneForm omega;
  Rational lambda;
  std::vector<std::size_t> betti;         // b_p(lambda, omega)
  std::vector<std::size_t> morse_counts;  // m_p(omega)
  std::vector<Verdict> verdicts;          // holds iff m_p >= b_p
  // Whether lambda is a critical value (-lambda*omega in the omega set);
  // unknown when the algebra has no rational adapted basis.
  std::optional<bool> critical;
  std::vector<std::string> notes;

  bool all_hold() const;
};

// Evaluates m_p >= b_p(lambda, omega) degree by degree. Throws NonClosedForm;
// InvalidArgument unless morse_counts has n + 1 entries.
NovikovReport novikov_report(const LieAlgebra& g, const OneForm& omega, const Rational& lambda,
                             const std::vector<std::size_t>& morse_counts);

}  // namespace liecoh
