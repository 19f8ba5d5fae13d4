#pragma once

#include <string>
#include <vector>

namespace hopflab {

/// Outcome of one named condition inside a verification run.
struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // first violating tuple, empty on pass
};

/// Ordered list of named pass/fail checks.
class Report {
 public:
  void add(const std::string& name, bool pass, const std::string& witness = "");
  void merge(const Report& other, const std::string& prefix = "");
  bool ok() const;
  /// Throws std::out_of_range for unknown names.
  bool passed(const std::string& name) const;
  const Check* find(const std::string& name) const;
  const std::vector<Check>& checks() const { return checks_; }
  std::string to_string() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace hopflab
