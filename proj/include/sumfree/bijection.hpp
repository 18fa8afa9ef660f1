#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "sumfree/bitstream.hpp"

namespace sumfree {

enum class Label : std::uint8_t { zero = 0, one = 1, star = 2 };

char label_char(Label l);

/// Ternary labeling of 1..horizon: one for members, star for pairwise sums of
/// members, zero otherwise.
struct LabeledPrefix {
  std::uint64_t horizon = 0;
  std::vector<Label> labels;  // labels[n - 1] labels the integer n
  std::uint64_t consumed = 0;

  Label at(std::uint64_t n) const { return labels.at(n - 1); }
  std::string to_string() const;
};

/// Ascending members of a sum-free set known to be complete on [1, horizon],
/// with per-gap tallies: mu[i] zeros and alpha[i] stars lie strictly between
/// elements[i] and elements[i + 1].
///
/// Decoded values are bounded by the sieve horizon and fit in 64 bits.
struct SumFreePrefix {
  std::vector<std::uint64_t> elements;
  std::vector<std::uint64_t> mu;
  std::vector<std::uint64_t> alpha;
  std::uint64_t horizon = 0;
  std::uint64_t consumed = 0;

  std::size_t size() const { return elements.size(); }
};

struct DecodeResult {
  LabeledPrefix labeled;
  SumFreePrefix set;
};

/// Stop conditions for decode_elements. Decoding halts at whichever comes first.
struct DecodeLimits {
  std::uint64_t horizon = 0;
  std::size_t max_elements = std::numeric_limits<std::size_t>::max();
};

/// Decodes c into the sum-free set it encodes on 1..horizon, keeping every label.
DecodeResult decode(BitStream& c, std::uint64_t horizon);

/// Same construction without materializing labels. Uses a segmented sum
/// sieve, so memory stays bounded for horizons far beyond the label limit.
/// `on_element` is called for each member as soon as it is placed.
SumFreePrefix decode_elements(BitStream& c, const DecodeLimits& limits,
                              const std::function<void(std::uint64_t)>& on_element = {});

/// Rebuilds the labeling on 1..horizon and deletes the stars.
/// Throws std::invalid_argument for unsorted input and NotSumFree when a member
/// is a pairwise sum.
BitWord encode(std::span<const std::uint64_t> elements, std::uint64_t horizon);
/// Uses s.horizon, or the largest element when horizon is unset.
BitWord encode(const SumFreePrefix& s);

struct GapProfile {
  std::vector<std::uint64_t> mu;
  std::vector<std::uint64_t> alpha;
};

/// Zero and star counts between consecutive one-labels.
/// Requires label(1) == one and at least two members; throws InsufficientData.
GapProfile gap_profile(const LabeledPrefix& lp);

/// Elements of S+S (pairs i <= j) that are <= bound, ascending and unique.
/// Quadratic enumeration, independent of the decoder sieve.
std::vector<std::uint64_t> pairwise_sums(std::span<const std::uint64_t> elements, std::uint64_t bound);

/// Sequence file: ASCII decimal, one per line, '#' lines ignored, strictly increasing.
std::vector<std::uint64_t> read_sequence(std::istream& in);
std::vector<std::uint64_t> read_sequence_file(const std::filesystem::path& path);
void write_sequence(std::ostream& out, std::span<const std::uint64_t> elements);

}  // namespace sumfree
