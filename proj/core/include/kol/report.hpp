#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kol {

/// One named verification outcome. `value` carries a margin, distance or
/// estimate when the check is numeric; exact checks leave it empty.
struct Check {
  std::string name;
  bool pass = false;
  std::optional<double> value;
  std::optional<double> threshold;
  std::string detail;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  Check& add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::nullopt, std::nullopt, std::move(detail)});
    return checks.back();
  }
  Check& add(std::string name, bool pass, double value, std::optional<double> threshold,
             std::string detail = {}) {
    checks.push_back({std::move(name), pass, value, threshold, std::move(detail)});
    return checks.back();
  }
  void append(const Report& other) {
    for (const auto& c : other.checks) {
      checks.push_back(c);
      checks.back().name = other.suite + "." + c.name;
    }
  }
};

}  // namespace kol
