#include "sumfree/bitstream.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sumfree {

BitWord parse_bit_word(std::string_view text) {
  BitWord out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      out.push_back(static_cast<std::uint8_t>(ch - '0'));
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument(std::string("bit word: unexpected character '") + ch + "'");
    }
  }
  return out;
}

std::string to_string(const BitWord& w) {
  std::string s;
  s.reserve(w.size());
  for (auto b : w) s.push_back(b ? '1' : '0');
  return s;
}

bool BitStream::next() {
  bool bit;
  if (lookahead_) {
    bit = *lookahead_;
    lookahead_.reset();
  } else {
    bit = pull();
  }
  ++position_;
  return bit;
}

std::uint64_t BitStream::skip_zeros(std::uint64_t limit) {
  if (limit == 0) return 0;
  std::uint64_t count = 0;
  if (lookahead_) {
    if (*lookahead_) return 0;
    lookahead_.reset();
    ++count;
  }
  if (count < limit) count += pull_zeros(limit - count);
  position_ += count;
  return count;
}

std::uint64_t BitStream::pull_zeros(std::uint64_t limit) {
  std::uint64_t count = 0;
  while (count < limit) {
    bool bit;
    try {
      bit = pull();
    } catch (const StreamExhausted&) {
      break;
    }
    if (bit) {
      park(true);
      break;
    }
    ++count;
  }
  return count;
}

BitWord take(BitStream& c, std::uint64_t count) {
  BitWord out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(c.next() ? 1 : 0);
  return out;
}

PeriodicStream::PeriodicStream(BitWord prefix, BitWord tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {}

bool PeriodicStream::pull() {
  const std::uint64_t i = index_;
  if (i < prefix_.size()) {
    ++index_;
    return prefix_[i] != 0;
  }
  if (tail_.empty()) throw StreamExhausted("bit stream exhausted after " + std::to_string(i) + " bits");
  ++index_;
  return tail_[(i - prefix_.size()) % tail_.size()] != 0;
}

std::string PeriodicStream::describe() const {
  std::string s = "periodic:" + to_string(prefix_);
  if (!tail_.empty()) s += "/" + to_string(tail_);
  return s;
}

GapStream::GapStream(GapFunction gap, std::string label)
    : gap_(std::move(gap)), label_(std::move(label)) {}

bool GapStream::pull() {
  if (zeros_left_ > 0) {
    --zeros_left_;
    return false;
  }
  ++ones_emitted_;
  zeros_left_ = gap_(ones_emitted_);
  return true;
}

std::uint64_t GapStream::pull_zeros(std::uint64_t limit) {
  // Before the first pull the head of the stream is the leading 1.
  if (ones_emitted_ == 0) return 0;
  const std::uint64_t n = std::min(limit, zeros_left_);
  zeros_left_ -= n;
  return n;
}

std::optional<TailRule> parse_tail_rule(std::string_view name) {
  if (name == "none") return TailRule::none;
  if (name == "zeros") return TailRule::zeros;
  if (name == "ones") return TailRule::ones;
  if (name == "repeat") return TailRule::repeat;
  return std::nullopt;
}

BitWord read_bit_word_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open bit word file: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_bit_word(buf.str());
}

std::unique_ptr<BitStream> open_bit_file(const std::filesystem::path& path, TailRule tail) {
  BitWord bits = read_bit_word_file(path);
  switch (tail) {
    case TailRule::none:
      return std::make_unique<PeriodicStream>(std::move(bits), BitWord{});
    case TailRule::zeros:
      return std::make_unique<PeriodicStream>(std::move(bits), BitWord{0});
    case TailRule::ones:
      return std::make_unique<PeriodicStream>(std::move(bits), BitWord{1});
    case TailRule::repeat:
      if (bits.empty()) throw std::invalid_argument("repeat tail rule needs a nonempty file");
      return std::make_unique<PeriodicStream>(BitWord{}, std::move(bits));
  }
  throw std::logic_error("unreachable tail rule");
}

}  // namespace sumfree
