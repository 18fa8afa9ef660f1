#include "sumfree/report.hpp"

namespace sumfree {

void Report::fail(std::uint64_t index, BigInt expected, BigInt actual, std::string detail) {
  pass = false;
  violations.push_back({index, std::move(expected), std::move(actual), std::move(detail)});
}

std::uint64_t Report::first_violation() const {
  if (violations.empty()) throw std::logic_error("report has no violations");
  return violations.front().index;
}

nlohmann::ordered_json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  if (v > 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["kind"] = r.kind;
  j["params"] = r.params;
  j["N"] = r.n;
  j["pass"] = r.pass;
  if (!r.violations.empty()) j["first_violation"] = r.violations.front().index;
  auto& vs = j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json e;
    e["index"] = v.index;
    e["expected"] = big_to_json(v.expected);
    e["actual"] = big_to_json(v.actual);
    if (!v.detail.empty()) e["detail"] = v.detail;
    vs.push_back(std::move(e));
  }
  j["ranks"] = r.ranks;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

nlohmann::ordered_json merge_reports(const std::vector<Report>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["kind"] = "all";
  bool pass = true;
  auto& arr = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    arr.push_back(to_json(r));
  }
  j["pass"] = pass;
  return j;
}

}  // namespace sumfree
