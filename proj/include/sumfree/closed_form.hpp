#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumfree/bijection.hpp"
#include "sumfree/core.hpp"
#include "sumfree/report.hpp"
#include "sumfree/substitution.hpp"

namespace sumfree {

/// Weights h(1), h(2), ... with sum_{i<j} h(i) < h(j), so that
/// S_n = 1 + sum_i eps_i h(i) over the binary digits of n.
class NumerationSystem {
 public:
  NumerationSystem() = default;
  /// h[i] holds h(i + 1). Throws std::invalid_argument if the dominance
  /// property fails anywhere.
  explicit NumerationSystem(std::vector<BigNat> h);

  const std::vector<BigNat>& weights() const { return h_; }
  /// 1-based access: weight(1) == h(1).
  const BigNat& weight(std::size_t i) const { return h_.at(i - 1); }
  std::size_t size() const { return h_.size(); }

  static bool is_dominant(std::span<const BigNat> h);

 private:
  std::vector<BigNat> h_;
};

/// h(n) = sum_{i=1}^{2^{n-1}} (mu_i + alpha_i) + 2^{n-1} for n = 1..M.
/// mu[i] and alpha[i] hold index i + 1. Throws InsufficientData unless both
/// cover 1..2^{M-1}.
NumerationSystem h_from_gaps(std::span<const std::uint64_t> mu, std::span<const std::uint64_t> alpha, unsigned M);

/// Closed form of h(n) for the fixed point of the substitution:
/// (l1+l2) (l3^{n-1} - 2^{n-1})/(l3 - 2) + l1 l3^{n-1} + 3^{n-1} + 2^{n-1}.
/// The quotient is evaluated as sum_{i=0}^{n-2} l3^i 2^{n-2-i}.
BigNat h_cantor_closed(unsigned n, const SubstitutionParams& p);

/// Star count in the n-th gap: (3^k + 1)/2 where n = 2^k (2j + 1).
BigNat alpha_closed(std::uint64_t n);

/// 1 + sum eps_i h(i) over the binary digits of n. Throws InsufficientData if
/// n needs more digits than ns provides.
BigNat s_closed(std::uint64_t n, const NumerationSystem& ns);

/// sum_{i<=n} mu_i + (n+1)(n+2)/2, valid for increasing mu with
/// mu_{i+1} > 2 sum_{j<=i} mu_j. Throws HypothesisViolation naming the first
/// index where the hypothesis fails, InsufficientData if mu is too short.
BigNat s_fast_growth(std::span<const std::uint64_t> mu, std::uint64_t n);

/// Checks by direct enumeration of pairwise sums that, with T = 2^m - 1,
///   #{x in S+S : S_0 < x < S_T} == #{x in S+S : S_T + 1 < x <= 2 S_T},
///   #{x in S+S : S_{k-1} < x < S_k} == #{x in S+S : S_{2^m+k-1} < x < S_{2^m+k}}
///   for 0 < k < 2^m, and
///   sum_{i=1}^{T} alpha_i == (3^m - 1)/2 with alpha_i counted from S+S.
/// Violation indices: 0 for the first window pair, k for the k-th, and
/// 2^m for the star sum. Throws InsufficientData unless S covers 0..2^{m+1}.
Report verify_reflection_windows(std::span<const std::uint64_t> elements, unsigned m);

}  // namespace sumfree
