#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qgr {

struct Check {
  std::string name;
  bool ok = false;
  std::string witness;  // failure detail, or an informative value worth reporting
  std::int64_t elapsed_ms = 0;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string witness = "") {
    checks.push_back(Check{std::move(name), ok, std::move(witness), 0});
  }
  void merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  std::size_t failed() const {
    std::size_t k = 0;
    for (const auto& c : checks)
      if (!c.ok) ++k;
    return k;
  }
};

}  // namespace qgr
