#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecoh::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputFailure = 1;   // parse or validation failure
inline constexpr int kDomainFailure = 2;  // non-closed form, not solvable, not triangularizable
inline constexpr int kIoFailure = 3;

// Runs one command line. `args` excludes the program name, e.g.
// {"cohomology", "sol3.json", "--omega", "1,0,0", "--reps"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecoh::cli
