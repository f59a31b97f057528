#pragma once

// Executable verification sweep: each criterion re-derives a block of the
// stored tables and identities and compares exactly.  The report text is
// deterministic; wall-clock timings are kept separate so repeated runs are
// byte-identical.

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermat {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;   // deterministic
  double seconds = 0.0; // not part of the deterministic report
};

// Run criteria 1..8 over n in [n_lo, n_hi]; progress notes go to *progress
// when given (not deterministic, intended for a terminal).
std::vector<CriterionResult> run_acceptance(int n_lo = 3, int n_hi = 6, std::ostream* progress = nullptr);

// One line per criterion plus a summary line; deterministic.
std::string acceptance_report(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace hypermat
