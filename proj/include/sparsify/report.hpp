#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace sparsify {

// One named invariant and the concrete cases that broke it.
struct Check {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;

  void fail(std::string what) {
    passed = false;
    if (failures.size() < 20) failures.push_back(std::move(what));
  }
};

struct Report {
  std::deque<Check> checks;  // stable references across add()

  Check& add(std::string name) {
    checks.push_back({std::move(name), true, {}});
    return checks.back();
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::string summary() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.passed ? "ok   " : "FAIL ") + c.name + "\n";
      for (const auto& f : c.failures) out += "       " + f + "\n";
    }
    return out;
  }
};

// Raised when a construction step finds a property it relies on broken.
class LemmaViolation : public std::runtime_error {
 public:
  LemmaViolation(std::string stage, std::string property, std::string detail)
      : std::runtime_error(stage + ": " + property + ": " + detail),
        stage_(std::move(stage)), property_(std::move(property)),
        detail_(std::move(detail)) {}

  const std::string& stage() const { return stage_; }
  const std::string& property() const { return property_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string stage_, property_, detail_;
};

}  // namespace sparsify
