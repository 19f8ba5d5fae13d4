#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopflab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> failures;  // names of the failed sub-checks
  int checks = 0;
  double seconds = 0;
};

/// Runs one acceptance criterion (1..11). long_mode adds the FK4 build to
/// criterion 2. Progress lines go to `log` when given.
CriterionResult run_criterion(int id, bool long_mode = false, std::ostream* log = nullptr);
std::vector<CriterionResult> run_acceptance(bool long_mode = false, std::ostream* log = nullptr);

/// "PASS [3] title (n checks, t s)" or "FAIL ..." followed by the failures.
std::string format_result(const CriterionResult& r);

}  // namespace hopflab
