#pragma once

#include <optional>
#include <string>
#include <vector>

namespace twistkit {

/// Outcome of one checked relation, order by order.
struct RelationResult {
  std::string name;
  std::vector<bool> order_ok;          // index k: coefficient of h^k vanished
  std::optional<int> first_failure;    // lowest failing order
  std::string residual;                // rendering of the first nonzero residual
  bool expected_failure = false;       // documented negative result

  bool passed() const { return !first_failure.has_value(); }
};

struct VerificationReport {
  std::vector<RelationResult> relations;

  bool passed() const {
    for (const auto& r : relations)
      if (!r.passed()) return false;
    return true;
  }
  /// Every relation passes or is a flagged expected failure.
  bool passed_or_expected() const {
    for (const auto& r : relations)
      if (!r.passed() && !r.expected_failure) return false;
    return true;
  }
  const RelationResult* find(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
  std::string render() const;
};

}  // namespace twistkit
