#include "redinv/report.hpp"

#include <algorithm>

namespace redinv {

CheckResult& Report::find_or_add(const std::string& name) {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const CheckResult& c) { return c.name == name; });
  if (it != checks_.end()) return *it;
  checks_.push_back({name, true, {}, false});
  return checks_.back();
}

void Report::fail(const std::string& name, std::string counterexample) {
  auto& c = find_or_add(name);
  c.pass = false;
  if (c.counterexamples.size() < kMaxCounterexamples) c.counterexamples.push_back(std::move(counterexample));
}

void Report::touch(const std::string& name, bool informational) {
  auto& c = find_or_add(name);
  c.informational = c.informational || informational;
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks_) {
    auto& mine = find_or_add(c.name);
    mine.informational = mine.informational || c.informational;
    if (!c.pass) mine.pass = false;
    for (const auto& ce : c.counterexamples)
      if (mine.counterexamples.size() < kMaxCounterexamples) mine.counterexamples.push_back(ce);
  }
}

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass || c.informational; });
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += "CHECK " + c.name + ": ";
    if (c.pass)
      out += "PASS";
    else
      out += c.informational ? "MISMATCH (informational)" : "FAIL";
    for (const auto& ce : c.counterexamples) out += " [" + ce + "]";
    out += '\n';
  }
  return out;
}

}  // namespace redinv
