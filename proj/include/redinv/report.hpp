#pragma once

#include <string>
#include <vector>

namespace redinv {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> counterexamples;
  /// Informational checks are reported but never fail the report.
  bool informational = false;
};

/// Ordered list of named checks, rendered one per line as
/// "CHECK <name>: PASS|FAIL [counterexample ...]".
class Report {
 public:
  /// Records a failure for `name`, creating the check if needed. Only the
  /// first few counterexamples are kept.
  void fail(const std::string& name, std::string counterexample);
  /// Ensures the check exists (as a pass unless a failure was recorded).
  void touch(const std::string& name, bool informational = false);
  void append(const Report& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  std::string to_text() const;

  static constexpr std::size_t kMaxCounterexamples = 3;

 private:
  CheckResult& find_or_add(const std::string& name);
  std::vector<CheckResult> checks_;
};

}  // namespace redinv
