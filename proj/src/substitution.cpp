#include "sumfree/substitution.hpp"

#include <charconv>
#include <stdexcept>

#include "sumfree/errors.hpp"

namespace sumfree {

void SubstitutionParams::validate() const {
  if (l3 < 3) throw std::invalid_argument("substitution: l3 must be >= 3");
}

std::string SubstitutionParams::to_string() const {
  return std::to_string(l1) + "," + std::to_string(l2) + "," + std::to_string(l3);
}

SubstitutionParams parse_substitution(std::string_view text) {
  std::uint64_t v[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [ptr, ec] = std::from_chars(p, end, v[i]);
    if (ec != std::errc{}) throw std::invalid_argument("substitution: expected l1,l2,l3");
    p = ptr;
    if (i < 2) {
      if (p == end || *p != ',') throw std::invalid_argument("substitution: expected l1,l2,l3");
      ++p;
    }
  }
  if (p != end) throw std::invalid_argument("substitution: trailing characters");
  SubstitutionParams params{v[0], v[1], v[2]};
  params.validate();
  return params;
}

BitWord apply_substitution(const SubstitutionParams& p, const BitWord& w) {
  BitWord out;
  for (auto b : w) {
    if (b) {
      out.push_back(1);
      out.insert(out.end(), p.l1, 0);
      out.push_back(1);
      out.insert(out.end(), p.l2, 0);
    } else {
      out.insert(out.end(), p.l3, 0);
    }
  }
  return out;
}

CantorLikeStream::CantorLikeStream(SubstitutionParams p) : p_(p) {
  p_.validate();
  runs_ = {0};  // sigma^0(1) = 1
}

std::string CantorLikeStream::describe() const { return "subst:" + p_.to_string(); }

void CantorLikeStream::expand() {
  std::uint64_t a, b;
  if (__builtin_mul_overflow(p_.l1, zero_block_, &a) || __builtin_mul_overflow(p_.l2, zero_block_, &b)) {
    throw std::overflow_error("substitution fixed point: run length exceeds 64 bits");
  }
  const std::size_t half = runs_.size();
  runs_.reserve(2 * half);
  runs_.insert(runs_.end(), runs_.begin(), runs_.begin() + static_cast<std::ptrdiff_t>(half));
  if (__builtin_add_overflow(runs_[half - 1], a, &runs_[half - 1]) ||
      __builtin_add_overflow(runs_.back(), b, &runs_.back())) {
    throw std::overflow_error("substitution fixed point: run length exceeds 64 bits");
  }
  if (__builtin_mul_overflow(zero_block_, p_.l3, &zero_block_)) zero_block_ = ~std::uint64_t{0};
}

bool CantorLikeStream::pull() {
  if (started_ && zeros_left_ > 0) {
    --zeros_left_;
    return false;
  }
  while (next_one_ + 1 >= runs_.size()) expand();
  zeros_left_ = runs_[next_one_++];
  started_ = true;
  return true;
}

std::uint64_t CantorLikeStream::pull_zeros(std::uint64_t limit) {
  if (!started_) return 0;
  const std::uint64_t n = std::min(limit, zeros_left_);
  zeros_left_ -= n;
  return n;
}

BigNat mu_closed_form(std::uint64_t n, const SubstitutionParams& p) {
  p.validate();
  const unsigned k = two_adic_valuation(n);
  const BigNat l3k = pow_big(p.l3, k);
  return BigNat(p.l2) * (l3k - 1) / (p.l3 - 1) + BigNat(p.l1) * l3k;
}

std::vector<std::uint64_t> scan_gaps(BitStream& c, std::size_t count) {
  if (!c.next()) throw std::invalid_argument("scan_gaps: sequence must start with 1");
  std::vector<std::uint64_t> mu;
  mu.reserve(count);
  while (mu.size() < count) {
    std::uint64_t run = 0;
    for (;;) {
      const std::uint64_t z = c.skip_zeros(~std::uint64_t{0} - run);
      run += z;
      if (z == 0 || run == ~std::uint64_t{0}) break;
    }
    if (!c.next()) throw std::logic_error("scan_gaps: zero after a short zero run");
    mu.push_back(run);
  }
  return mu;
}

std::vector<std::uint64_t> scan_mu(const SubstitutionParams& p, std::size_t count) {
  CantorLikeStream c(p);
  return scan_gaps(c, count);
}

GrowthReport check_growth_condition(std::span<const std::uint64_t> mu, unsigned M) {
  if (M >= 63 || mu.size() < (std::size_t{1} << M)) {
    throw InsufficientData("check_growth_condition: mu must cover indices 1..2^M");
  }
  auto at = [&](std::uint64_t i) { return mu[i - 1]; };
  GrowthReport r;
  BigNat prefix_sum = 0;  // sum of mu_i for i < 2^m
  std::uint64_t summed = 0;
  for (unsigned m = 1; m <= M; ++m) {
    const std::uint64_t top = std::uint64_t{1} << m;
    for (; summed + 1 < top; ++summed) prefix_sum += at(summed + 1);
    const BigNat bound = prefix_sum + top + (pow_big(3, m) - 1) / 2;
    if (BigNat(at(top)) <= bound) {
      r.failures.push_back({m, GrowthFailure::Clause::growth, top, bound, at(top)});
    }
    for (std::uint64_t k = 1; k < top && top + k <= mu.size(); ++k) {
      if (at(top + k) != at(k)) {
        r.failures.push_back({m, GrowthFailure::Clause::periodic, top + k, at(k), at(top + k)});
        break;
      }
    }
  }
  r.holds = r.failures.empty();
  return r;
}

bool is_admissible(const SubstitutionParams& p) {
  const BigInt l1 = p.l1, l2 = p.l2, l3 = p.l3;
  return p.l3 >= 3 && 7 * l3 >= 4 * (l1 + l2) + 17 && l1 * (l3 - 1) + l2 > 3;
}

}  // namespace sumfree
