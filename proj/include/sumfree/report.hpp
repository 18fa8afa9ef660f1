#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sumfree/core.hpp"

namespace sumfree {

struct Violation {
  std::uint64_t index = 0;
  BigInt expected;
  BigInt actual;
  std::string detail;
};

/// Outcome of one verification suite. Serialized as
/// {schema, kind, params, N, pass, violations: [{index, expected, actual}], ranks}.
struct Report {
  std::string kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::uint64_t n = 0;
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::size_t> ranks;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  void fail(std::uint64_t index, BigInt expected, BigInt actual, std::string detail = {});
  /// Index of the first violation; reports list violations in discovery order.
  std::uint64_t first_violation() const;
};

inline constexpr int kReportSchema = 1;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::ordered_json big_to_json(const BigInt& v);
nlohmann::ordered_json to_json(const Report& r);

/// Folds several reports into one with kind "all"; passes iff all pass.
nlohmann::ordered_json merge_reports(const std::vector<Report>& reports);

}  // namespace sumfree
