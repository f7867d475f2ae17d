// Structured pass/fail reports produced by the verification suites.
#pragma once

#include <string>
#include <vector>

namespace mcg {

struct CheckLine {
  std::string name;
  bool ok;
  std::string detail;  // non-empty on failure (or informative extras)
};

struct CheckReport {
  std::string suite;
  std::vector<CheckLine> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  void add(const std::string& name, bool line_ok, const std::string& detail = "") {
    checks.push_back({name, line_ok, detail});
  }
  void merge(const CheckReport& other) {
    for (const auto& c : other.checks)
      checks.push_back({other.suite + ": " + c.name, c.ok, c.detail});
  }
};

}  // namespace mcg
