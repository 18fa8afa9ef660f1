#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumfree/errors.hpp"

namespace sumfree {

/// A finite zero-one word, one bit per element (values 0 or 1).
using BitWord = std::vector<std::uint8_t>;

/// Parses '0'/'1' characters; whitespace is ignored, anything else throws.
BitWord parse_bit_word(std::string_view text);
std::string to_string(const BitWord& w);

/// Pull interface over an infinite zero-one sequence c_0 c_1 c_2 ...
///
/// Finite sources throw StreamExhausted when pulled past their end.
/// Subclasses implement pull(); sources with long zero runs should also
/// override pull_zeros() so the decoder can skip runs in O(1).
class BitStream {
 public:
  virtual ~BitStream() = default;

  bool next();

  /// Consumes up to `limit` consecutive zeros from the head of the stream and
  /// returns how many were consumed. A return value below `limit` means the
  /// next bit is 1 or the stream is exhausted.
  std::uint64_t skip_zeros(std::uint64_t limit);

  /// Bits handed out so far (next() plus skipped zeros).
  std::uint64_t position() const { return position_; }

  virtual std::string describe() const = 0;

 protected:
  virtual bool pull() = 0;
  /// Default pulls bit by bit and parks the first 1 in the lookahead slot.
  virtual std::uint64_t pull_zeros(std::uint64_t limit);
  void park(bool bit) { lookahead_ = bit; }

 private:
  std::optional<bool> lookahead_;
  std::uint64_t position_ = 0;
};

/// First `count` bits of a stream.
BitWord take(BitStream& c, std::uint64_t count);

/// prefix followed by tail repeated forever. Empty tail makes the stream
/// finite: it is exhausted after the prefix.
class PeriodicStream final : public BitStream {
 public:
  PeriodicStream(BitWord prefix, BitWord tail);
  std::string describe() const override;

 protected:
  bool pull() override;

 private:
  BitWord prefix_;
  BitWord tail_;
  std::uint64_t index_ = 0;
};

/// c = 1 0^{gap(1)} 1 0^{gap(2)} 1 ...
class GapStream final : public BitStream {
 public:
  using GapFunction = std::function<std::uint64_t(std::uint64_t)>;
  GapStream(GapFunction gap, std::string label);
  std::string describe() const override { return label_; }

 protected:
  bool pull() override;
  std::uint64_t pull_zeros(std::uint64_t limit) override;

 private:
  GapFunction gap_;
  std::string label_;
  std::uint64_t ones_emitted_ = 0;
  std::uint64_t zeros_left_ = 0;
};

/// What a file-backed stream yields after the file's bits run out.
enum class TailRule { none, zeros, ones, repeat };

std::optional<TailRule> parse_tail_rule(std::string_view name);

/// Reads a bit-word file ('0'/'1', whitespace ignored).
BitWord read_bit_word_file(const std::filesystem::path& path);

std::unique_ptr<BitStream> open_bit_file(const std::filesystem::path& path, TailRule tail);

}  // namespace sumfree
