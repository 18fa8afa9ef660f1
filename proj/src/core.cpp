#include "sumfree/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sumfree {

namespace {

void check_base(std::uint32_t base) {
  if (base < 2 || base > 36) throw std::invalid_argument("base must be in [2, 36]");
}

char digit_char(std::uint32_t d) {
  return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
}

}  // namespace

std::string DigitWord::to_string() const {
  std::string out;
  out.reserve(digits.size());
  for (auto d : digits) out.push_back(digit_char(d));
  return out;
}

DigitWord parse_digit_word(std::string_view text, std::uint32_t base) {
  check_base(base);
  DigitWord w{{}, base};
  w.digits.reserve(text.size());
  for (char ch : text) {
    std::uint32_t d;
    if (ch >= '0' && ch <= '9') {
      d = static_cast<std::uint32_t>(ch - '0');
    } else if (ch >= 'a' && ch <= 'z') {
      d = static_cast<std::uint32_t>(ch - 'a') + 10;
    } else {
      throw std::invalid_argument(std::string("bad digit character '") + ch + "'");
    }
    if (d >= base) throw std::invalid_argument("digit out of range for base");
    w.digits.push_back(d);
  }
  return w;
}

DigitWord base_digits(const BigNat& n, std::uint32_t base, std::size_t min_len) {
  check_base(base);
  if (n < 0) throw std::invalid_argument("base_digits: negative value");
  DigitWord w{{}, base};
  BigNat rest = n;
  while (rest > 0) {
    w.digits.push_back(static_cast<std::uint32_t>(rest % base));
    rest /= base;
  }
  while (w.digits.size() < min_len) w.digits.push_back(0);
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

DigitWord base_digits(std::uint64_t n, std::uint32_t base, std::size_t min_len) {
  check_base(base);
  DigitWord w{{}, base};
  while (n > 0) {
    w.digits.push_back(static_cast<std::uint32_t>(n % base));
    n /= base;
  }
  while (w.digits.size() < min_len) w.digits.push_back(0);
  std::reverse(w.digits.begin(), w.digits.end());
  return w;
}

BigNat word_value(const DigitWord& w) {
  BigNat v = 0;
  for (auto d : w.digits) v = v * w.base + d;
  return v;
}

std::uint64_t word_value_u64(const DigitWord& w) {
  std::uint64_t v = 0;
  for (auto d : w.digits) {
    if (__builtin_mul_overflow(v, std::uint64_t{w.base}, &v) ||
        __builtin_add_overflow(v, std::uint64_t{d}, &v)) {
      throw std::overflow_error("word_value_u64: value exceeds 64 bits");
    }
  }
  return v;
}

BigNat m_complement(const BigNat& n, std::uint32_t m) {
  const BigNat top = BigNat(1) << m;
  if (n < 0 || n >= top) throw std::invalid_argument("m_complement: n must be < 2^m");
  return top - 1 - n;
}

int thue_morse(std::uint64_t n) { return 1 ^ digit_sum_parity(n); }

int digit_sum_parity(std::uint64_t n) { return std::popcount(n) & 1; }

unsigned two_adic_valuation(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("two_adic_valuation: n must be >= 1");
  return static_cast<unsigned>(std::countr_zero(n));
}

BigNat pow_big(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(BigNat(base), exp);
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("value does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace sumfree
