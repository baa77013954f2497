#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gfl {

/// Outcome of one exact identity evaluation. pass is true iff left == right
/// as exact values; left/right hold their printed forms.
struct IdentityReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  std::string left;
  std::string right;
  bool pass = false;
  /// Printed-formula discrepancies observed while evaluating; never failures.
  std::vector<std::string> errata;

  IdentityReport& param(std::string name, std::string value) {
    params.emplace_back(std::move(name), std::move(value));
    return *this;
  }
  IdentityReport& param(std::string name, long long value) { return param(std::move(name), std::to_string(value)); }
};

std::string describe(const IdentityReport& r);

}  // namespace gfl
