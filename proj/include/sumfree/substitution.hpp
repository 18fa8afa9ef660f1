#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/bitstream.hpp"
#include "sumfree/core.hpp"

namespace sumfree {

/// Parameters of the substitution 1 -> 1 0^l1 1 0^l2, 0 -> 0^l3.
struct SubstitutionParams {
  std::uint64_t l1 = 0;
  std::uint64_t l2 = 0;
  std::uint64_t l3 = 3;

  /// Throws std::invalid_argument unless l3 >= 3.
  void validate() const;
  std::string to_string() const;  // "l1,l2,l3"

  friend bool operator==(const SubstitutionParams&, const SubstitutionParams&) = default;
};

/// Parses "l1,l2,l3".
SubstitutionParams parse_substitution(std::string_view text);

/// Image of a finite word under the substitution; used for small expansions.
BitWord apply_substitution(const SubstitutionParams& p, const BitWord& w);

/// Fixed point of the substitution starting with 1.
///
/// The prefix sigma^k(1) is kept run-length encoded as the zero count after
/// each of its 2^k ones. Going from level k to k+1 doubles the list:
/// sigma^{k+1}(1) = sigma^k(1) (sigma^k(0))^l1 sigma^k(1) (sigma^k(0))^l2,
/// so the trailing run grows by l1*l3^k in the first copy and l2*l3^k in the
/// second. The last run of a level is never emitted before the next level is
/// built, since only interior runs are final.
class CantorLikeStream final : public BitStream {
 public:
  explicit CantorLikeStream(SubstitutionParams p);
  std::string describe() const override;
  const SubstitutionParams& params() const { return p_; }

 protected:
  bool pull() override;
  std::uint64_t pull_zeros(std::uint64_t limit) override;

 private:
  void expand();

  SubstitutionParams p_;
  std::vector<std::uint64_t> runs_;
  std::uint64_t zero_block_ = 1;  // l3^level, length of sigma^level(0)
  std::size_t next_one_ = 0;      // index of the next 1 to emit
  std::uint64_t zeros_left_ = 0;
  bool started_ = false;
};

/// mu_n = l2 (l3^k - 1)/(l3 - 1) + l1 l3^k where n = 2^k (2j + 1).
BigNat mu_closed_form(std::uint64_t n, const SubstitutionParams& p);

/// First `count` gap lengths mu_1..mu_count, scanned from the fixed point.
std::vector<std::uint64_t> scan_gaps(BitStream& c, std::size_t count);
std::vector<std::uint64_t> scan_mu(const SubstitutionParams& p, std::size_t count);

/// The two-clause growth condition on a gap sequence, checked for m = 1..M:
///   growth:   mu_{2^m} > sum_{i<2^m} mu_i + 2^m + (3^m - 1)/2
///   periodic: mu_{2^m + k} = mu_k for 0 < k < 2^m
/// The periodic clause is checked for every index 2^m + k the data covers.
struct GrowthFailure {
  enum class Clause { growth = 1, periodic = 2 };
  unsigned m = 0;
  Clause clause = Clause::growth;
  std::uint64_t index = 0;  // offending mu index
  BigNat bound;             // growth: value mu_{2^m} must exceed; periodic: mu_k
  BigNat value;             // the offending mu value
};

struct GrowthReport {
  bool holds = true;
  std::vector<GrowthFailure> failures;  // sorted by (m, clause); front() is the first
};

/// mu[i] holds mu_{i+1}. Throws InsufficientData when mu covers fewer than 2^M indices.
GrowthReport check_growth_condition(std::span<const std::uint64_t> mu, unsigned M);

/// 7 l3 >= 4 (l1 + l2) + 17 and l1 (l3 - 1) + l2 > 3. Parameters passing this
/// produce 2-regular sum-free sets with the closed forms of closed_form.hpp.
bool is_admissible(const SubstitutionParams& p);

}  // namespace sumfree
