#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumfree/bijection.hpp"
#include "sumfree/core.hpp"
#include "sumfree/report.hpp"
#include "sumfree/substitution.hpp"

namespace sumfree {

/// Windows of the k-kernel subsequences (t(k^i n + b))_{n < window} for
/// 0 <= i <= depth and 0 <= b < k^i. Key (0, 0) is the sequence itself.
struct KernelFamily {
  unsigned base = 2;
  unsigned depth = 0;
  std::size_t window = 0;
  std::map<std::pair<unsigned, std::uint64_t>, std::vector<BigInt>> members;
};

/// Throws InsufficientData unless k^depth * window + k^depth <= seq.size().
KernelFamily kernel_family(std::span<const BigInt> seq, unsigned k, unsigned depth, std::size_t window);

/// Rank over Q of equal-length integer vectors, by fraction-free (Bareiss)
/// elimination. Pivots are taken as the first nonzero entry in row order.
/// Throws std::invalid_argument on empty input or ragged lengths.
std::size_t rational_rank(std::span<const std::vector<BigInt>> vectors);

/// Rank of the kernel family truncated at each depth 1..max_depth.
/// A rank that stops growing is evidence for k-regularity, not a proof.
std::vector<std::size_t> regularity_profile(std::span<const BigInt> seq, unsigned k, unsigned max_depth,
                                            std::size_t window);

/// True if ranks[d - 1] is the same for every depth d in [from, to].
bool ranks_stabilize(std::span<const std::size_t> ranks, unsigned from, unsigned to);

/// Widens a 64-bit sequence for kernel analysis.
std::vector<BigInt> to_big(std::span<const std::uint64_t> seq);

enum class RecurrenceKind {
  mu,       // mu_{2n} = l3 mu_n + l2,  mu_{2n+1} = l1
  alpha,    // alpha_{2n} = 3 alpha_n - 1,  alpha_{2n+1} = 1
  gap_sum,  // S_n = sum_{i<=n} mu_i + sum_{i<=n} alpha_i + (n + 1)
};

const char* to_string(RecurrenceKind kind);

/// Checks every instance of the recurrence for indices 1..2N (0..2N for
/// gap_sum) exactly. The mu kind needs params. Throws InsufficientData when
/// data does not cover the doubled indices.
Report verify_recurrences(RecurrenceKind kind, const SumFreePrefix& data, std::uint64_t N,
                          const std::optional<SubstitutionParams>& params = std::nullopt);

/// How (x_n mod 2) looks relative to the binary digit-sum parity s(n).
struct ParityClass {
  enum class Kind { constant, digit_sum, other };
  Kind kind = Kind::other;
  int offset = 0;  // x_n = offset (constant) or offset XOR s(n) (digit_sum)

  friend bool operator==(const ParityClass&, const ParityClass&) = default;
};

ParityClass classify_parity(std::span<const int> bits);
const char* to_string(ParityClass::Kind kind);

/// For j = 0..3, compares (S_{4n+j} mod 2)_{n<N} against the prediction
/// S_{4n+j} = 1 + (1 + l2 l3) s(n) + j2 h(2) + j1 h(1) (mod 2), where j = (j2 j1)_2
/// and h(1) = S_1 - 1, h(2) = S_2 - 1 are read from the data. The predicted
/// class is constant when 1 + l2 l3 is even and digit-sum coded otherwise.
/// Throws InsufficientData unless S covers 0..4N+3, std::invalid_argument for
/// parameters that are not admissible.
Report parity_profile(std::span<const std::uint64_t> elements, const SubstitutionParams& p, std::uint64_t N);

}  // namespace sumfree
