#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumfree/bijection.hpp"
#include "sumfree/bitstream.hpp"
#include "sumfree/core.hpp"
#include "sumfree/report.hpp"

namespace sumfree {

/// Deterministic finite automaton with output over digits 0..alphabet-1,
/// read most-significant digit first.
struct Dfao {
  struct State {
    std::string name;
    int output = 0;
  };
  std::vector<State> states;
  std::size_t initial = 0;
  std::uint32_t alphabet = 2;
  std::vector<std::vector<std::size_t>> transitions;  // transitions[state][digit]

  /// Throws std::invalid_argument unless transitions are total and in range.
  void validate() const;
  std::string to_table() const;
  std::string to_dot() const;
};

/// [(n)_b 1]_{2b-1} = (2b-1) [(n)_b]_{2b-1} + 1.
BigNat base_change_element(const BigNat& n, std::uint32_t b);

/// [(n)_b w]_{2b-1} for a suffix w over digits 0..b-1.
BigNat base_change_element(const BigNat& n, std::uint32_t b, const DigitWord& suffix);

/// Digit inspection: x is a member iff its base-(2b-1) digits are all < b and
/// the last one is 1.
bool is_base_change_member(std::uint64_t x, std::uint32_t b);

/// Three-state automaton over base 2b-1 accepting exactly the members:
/// q0/0 and q1/1 track whether the last digit read was 1, q2/0 absorbs any
/// digit >= b.
Dfao membership_automaton(std::uint32_t b);

/// Output of the state reached from the initial state on w. Throws
/// std::invalid_argument for digits outside the alphabet.
int dfao_run(const Dfao& a, const DigitWord& w);

/// Checks over [1, H]: the automaton agrees with digit inspection; no member is
/// a pairwise sum; the pairwise sums are exactly {(2b-1) m + 2}.
Report verify_sumset_structure(std::uint32_t b, std::uint64_t horizon);

/// Label of n in the base-change set's ternary labeling, by digit class of
/// (n)_{2b-1}: one for Sigma_b^* 1, star for last digit 2, zero otherwise.
Label base_change_label(std::uint64_t n, std::uint32_t b);

/// First `count` bits of the zero-one sequence of the base-change set, built
/// from the digit-class labels with stars deleted.
BitWord bitstream_from_base_change(std::uint32_t b, std::uint64_t count);

/// Infinite stream of the same bits.
class BaseChangeStream final : public BitStream {
 public:
  explicit BaseChangeStream(std::uint32_t b);
  std::string describe() const override { return "base-change:" + std::to_string(b_); }

 protected:
  bool pull() override;

 private:
  std::uint32_t b_;
  std::uint64_t n_ = 0;
};

/// Checks c_{(2b-2)n} = v_{(2b-1)n+1} and c_{(2b-2)n+i} = v_{(2b-1)n+i+2} for
/// 1 <= i <= 2b-3 and n < count.
Report verify_index_relations(std::uint32_t b, std::uint64_t count);

/// Members of the base-change set (with optional suffix) in [1, horizon], ascending.
std::vector<std::uint64_t> base_change_members(std::uint32_t b, std::uint64_t horizon);
std::vector<std::uint64_t> base_change_members(std::uint32_t b, std::uint64_t horizon, const DigitWord& suffix);

}  // namespace sumfree
