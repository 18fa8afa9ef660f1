#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sumfree {

/// Arbitrary-precision integer. Used wherever closed-form values can exceed
/// 64 bits (h(n) grows like l3^n).
using BigInt = boost::multiprecision::cpp_int;
/// Nonnegative by convention; same representation as BigInt.
using BigNat = BigInt;

/// Digits of a number in a fixed base, most-significant digit first.
struct DigitWord {
  std::vector<std::uint32_t> digits;
  std::uint32_t base = 2;

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  std::string to_string() const;

  friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

/// Parses a digit string ('0'-'9', then 'a'-'z') in the given base.
DigitWord parse_digit_word(std::string_view text, std::uint32_t base);

/// Base-b expansion of n, left-padded with zeros to at least min_len digits.
/// Zero with min_len == 0 yields the empty word.
DigitWord base_digits(const BigNat& n, std::uint32_t base, std::size_t min_len = 0);
DigitWord base_digits(std::uint64_t n, std::uint32_t base, std::size_t min_len = 0);

BigNat word_value(const DigitWord& w);
std::uint64_t word_value_u64(const DigitWord& w);

/// Value of the bitwise complement of the length-m binary representation of n.
/// Throws std::invalid_argument unless n < 2^m.
BigNat m_complement(const BigNat& n, std::uint32_t m);

/// Thue-Morse with t_0 = 1: t_{2n} = t_n, t_{2n+1} = 1 - t_n.
/// The t_0 = 0 variant is 1 - thue_morse(n).
int thue_morse(std::uint64_t n);

/// Binary digit sum of n modulo 2.
int digit_sum_parity(std::uint64_t n);

/// Largest k with 2^k | n. Requires n >= 1.
unsigned two_adic_valuation(std::uint64_t n);

BigNat pow_big(std::uint64_t base, unsigned exp);

/// Converts a BigInt that is known to fit, throwing std::overflow_error otherwise.
std::uint64_t to_u64(const BigInt& v);

}  // namespace sumfree
