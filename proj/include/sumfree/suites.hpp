#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/bitstream.hpp"
#include "sumfree/report.hpp"
#include "sumfree/substitution.hpp"

namespace sumfree {

/// Builds a stream from a source spec:
///   subst:l1,l2,l3 | periodic:W | periodic:P/W | file:PATH | base-change:B
/// File sources use `tail` once their bits run out.
std::unique_ptr<BitStream> make_stream(std::string_view spec, TailRule tail = TailRule::none);

/// Inputs for the verification suites. Zero means "suite default".
struct SuiteOptions {
  SubstitutionParams subst{3, 0, 5};
  std::uint32_t b = 2;
  std::uint64_t horizon = 0;
  std::uint64_t count = 0;
  unsigned m = 0;
  unsigned depth = 0;
  std::size_t window = 0;
  std::string source = "subst:3,0,5";
};

/// Suite names in their fixed reporting order.
const std::vector<std::string>& suite_names();

/// Runs one named suite; throws std::invalid_argument for unknown names.
Report run_suite(const std::string& name, const SuiteOptions& opts);

/// Runs every suite with its defaults, concurrently, results in suite_names() order.
std::vector<Report> run_all_suites(const SuiteOptions& opts);

}  // namespace sumfree
