#include "sumfree/closed_form.hpp"

#include <algorithm>
#include <bit>

#include "sumfree/errors.hpp"

namespace sumfree {

NumerationSystem::NumerationSystem(std::vector<BigNat> h) : h_(std::move(h)) {
  if (!is_dominant(h_)) throw std::invalid_argument("numeration system: need sum_{i<j} h(i) < h(j)");
}

bool NumerationSystem::is_dominant(std::span<const BigNat> h) {
  BigNat sum = 0;
  for (const auto& x : h) {
    if (x <= sum) return false;
    sum += x;
  }
  return true;
}

NumerationSystem h_from_gaps(std::span<const std::uint64_t> mu, std::span<const std::uint64_t> alpha, unsigned M) {
  if (M == 0) return NumerationSystem{};
  if (M >= 63) throw InsufficientData("h_from_gaps: M too large");
  const std::size_t need = std::size_t{1} << (M - 1);
  if (mu.size() < need || alpha.size() < need) {
    throw InsufficientData("h_from_gaps: gap data must cover 1..2^(M-1)");
  }
  std::vector<BigNat> h;
  h.reserve(M);
  BigNat g_sum = 0;
  std::size_t summed = 0;
  for (unsigned n = 1; n <= M; ++n) {
    const std::size_t top = std::size_t{1} << (n - 1);
    for (; summed < top; ++summed) g_sum += BigNat(mu[summed]) + alpha[summed];
    h.push_back(g_sum + top);
  }
  return NumerationSystem(std::move(h));
}

BigNat h_cantor_closed(unsigned n, const SubstitutionParams& p) {
  p.validate();
  if (n == 0) throw std::invalid_argument("h_cantor_closed: n must be >= 1");
  BigNat quotient = 0;
  for (unsigned i = 0; i + 2 <= n; ++i) quotient += pow_big(p.l3, i) * pow_big(2, n - 2 - i);
  return BigNat(p.l1 + p.l2) * quotient + BigNat(p.l1) * pow_big(p.l3, n - 1) + pow_big(3, n - 1) +
         pow_big(2, n - 1);
}

BigNat alpha_closed(std::uint64_t n) { return (pow_big(3, two_adic_valuation(n)) + 1) / 2; }

BigNat s_closed(std::uint64_t n, const NumerationSystem& ns) {
  const auto bits = static_cast<std::size_t>(std::bit_width(n));
  if (bits > ns.size()) throw InsufficientData("s_closed: numeration system too short for n");
  BigNat s = 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if ((n >> i) & 1) s += ns.weights()[i];
  }
  return s;
}

BigNat s_fast_growth(std::span<const std::uint64_t> mu, std::uint64_t n) {
  if (mu.size() < n) throw InsufficientData("s_fast_growth: mu must cover 1..n");
  BigNat sum = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t m = mu[i - 1];
    if (i > 1) {
      if (m < mu[i - 2]) throw HypothesisViolation(i, "s_fast_growth: mu not increasing at index " + std::to_string(i));
      if (BigNat(m) <= 2 * sum) {
        throw HypothesisViolation(i, "s_fast_growth: mu_" + std::to_string(i) + " <= 2 * sum of earlier gaps");
      }
    }
    sum += m;
  }
  return sum + BigNat(n + 1) * (n + 2) / 2;
}

Report verify_reflection_windows(std::span<const std::uint64_t> s, unsigned m) {
  if (m >= 40) throw InsufficientData("verify_reflection_windows: m too large");
  const std::size_t half = std::size_t{1} << m;
  if (s.size() < 2 * half + 1) throw InsufficientData("verify_reflection_windows: S must cover 0..2^(m+1)");

  Report r;
  r.kind = "reflection";
  r.params["m"] = m;
  r.n = half;

  const std::size_t t = half - 1;
  const std::uint64_t bound = std::max(2 * s[t], s[2 * half - 1]);
  const auto cut = static_cast<std::size_t>(std::upper_bound(s.begin(), s.end(), bound) - s.begin());
  const auto sums = pairwise_sums(s.first(cut), bound);
  // #{x in S+S : lo < x < hi}
  auto count_open = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    if (hi <= lo + 1) return 0;
    auto a = std::upper_bound(sums.begin(), sums.end(), lo);
    auto b = std::lower_bound(sums.begin(), sums.end(), hi);
    return b > a ? static_cast<std::uint64_t>(b - a) : 0;
  };

  const std::uint64_t left = count_open(s[0], s[t]);
  // The right window is closed at 2 S_T: that sum always exists and mirrors
  // 1 + 1 in the left window.
  const std::uint64_t right = count_open(s[t] + 1, 2 * s[t] + 1);
  if (left != right) r.fail(0, left, right, "outer windows");

  for (std::size_t k = 1; k < half; ++k) {
    const std::uint64_t l = count_open(s[k - 1], s[k]);
    const std::uint64_t rr = count_open(s[half + k - 1], s[half + k]);
    if (l != rr) r.fail(k, l, rr, "gap windows");
  }

  BigNat star_sum = 0;
  for (std::size_t i = 1; i <= t; ++i) star_sum += count_open(s[i - 1], s[i]);
  const BigNat expected = (pow_big(3, m) - 1) / 2;
  if (star_sum != expected) r.fail(half, expected, star_sum, "star sum");
  r.extra["star_sum"] = big_to_json(star_sum);
  return r;
}

}  // namespace sumfree
