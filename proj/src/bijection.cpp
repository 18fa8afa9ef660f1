#include "sumfree/bijection.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "sumfree/errors.hpp"

namespace sumfree {

char label_char(Label l) {
  switch (l) {
    case Label::zero: return '0';
    case Label::one: return '1';
    case Label::star: return '*';
  }
  return '?';
}

std::string LabeledPrefix::to_string() const {
  std::string s;
  s.reserve(labels.size());
  for (auto l : labels) s.push_back(label_char(l));
  return s;
}

namespace {

// Segment width of the sum sieve, in integers.
constexpr std::uint64_t kSegmentBits = std::uint64_t{1} << 26;

// Incremental decoder. Integers are labelled in increasing order; the sieve
// covers one segment [lo_, hi_) at a time. When a segment opens, every sum of
// two earlier members landing in it is marked; members placed inside the
// segment mark their own sums as they arrive.
class Decoder {
 public:
  Decoder(BitStream& c, const DecodeLimits& limits, LabeledPrefix* labeled,
          const std::function<void(std::uint64_t)>& on_element)
      : c_(c), limits_(limits), labeled_(labeled), on_element_(on_element) {
    if (labeled_) {
      labeled_->horizon = limits_.horizon;
      labeled_->labels.assign(limits_.horizon, Label::zero);
    }
  }

  SumFreePrefix run() {
    const std::uint64_t horizon = limits_.horizon;
    std::uint64_t n = 1;
    while (n <= horizon && !done()) {
      open_segment(n, std::min(horizon + 1, n + kSegmentBits));
      while (n < hi_ && !done()) {
        if (is_star(n)) {
          ++cur_alpha_;
          set_label(n, Label::star);
          ++n;
          continue;
        }
        if (pending_zeros_ > 0) {
          n = assign_zeros(n);
          continue;
        }
        pending_zeros_ = c_.skip_zeros(horizon - n + 1);
        if (pending_zeros_ > 0) continue;
        if (!c_.next()) throw std::logic_error("bit stream returned 0 after a short zero run");
        place(n);
        ++n;
      }
    }
    out_.horizon = done() ? out_.elements.back() : horizon;
    out_.consumed = consumed_;
    if (labeled_) {
      labeled_->horizon = out_.horizon;
      labeled_->labels.resize(out_.horizon);
      labeled_->consumed = consumed_;
    }
    return std::move(out_);
  }

 private:
  bool done() const { return out_.elements.size() >= limits_.max_elements; }

  bool is_star(std::uint64_t n) const {
    const std::uint64_t off = n - lo_;
    return (bits_[off >> 6] >> (off & 63)) & 1;
  }

  void mark(std::uint64_t sum) {
    const std::uint64_t off = sum - lo_;
    bits_[off >> 6] |= std::uint64_t{1} << (off & 63);
  }

  void set_label(std::uint64_t n, Label l) {
    if (labeled_) labeled_->labels[n - 1] = l;
  }

  void open_segment(std::uint64_t lo, std::uint64_t hi) {
    lo_ = lo;
    hi_ = hi;
    bits_.assign((hi - lo + 63) / 64, 0);
    const auto& s = out_.elements;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::uint64_t a = s[i];
      if (2 * a >= hi) break;
      const std::uint64_t need = lo > a ? std::max(a, lo - a) : a;
      auto it = std::lower_bound(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), need);
      for (; it != s.end() && a + *it < hi; ++it) mark(a + *it);
    }
  }

  // Hands pending zeros to the non-star integers from n on, stopping at the
  // segment end or when the zeros run out. Returns the next unlabelled integer.
  std::uint64_t assign_zeros(std::uint64_t n) {
    while (n < hi_ && pending_zeros_ > 0) {
      const std::uint64_t off = n - lo_;
      const std::uint64_t word_end = std::min(hi_, lo_ + ((off | 63) + 1));
      const std::uint64_t len = word_end - n;
      const std::uint64_t window = bits_[off >> 6] >> (off & 63);
      const std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
      const auto stars = static_cast<std::uint64_t>(std::popcount(window & mask));
      const std::uint64_t free = len - stars;
      if (!labeled_ && free <= pending_zeros_) {
        pending_zeros_ -= free;
        cur_mu_ += free;
        cur_alpha_ += stars;
        consumed_ += free;
        n = word_end;
        continue;
      }
      for (; n < word_end && pending_zeros_ > 0; ++n) {
        if (is_star(n)) {
          ++cur_alpha_;
          set_label(n, Label::star);
        } else {
          ++cur_mu_;
          --pending_zeros_;
          ++consumed_;
          set_label(n, Label::zero);
        }
      }
    }
    return n;
  }

  void place(std::uint64_t x) {
    ++consumed_;
    set_label(x, Label::one);
    auto& s = out_.elements;
    if (!s.empty()) {
      out_.mu.push_back(cur_mu_);
      out_.alpha.push_back(cur_alpha_);
    }
    cur_mu_ = 0;
    cur_alpha_ = 0;
    s.push_back(x);
    for (auto a : s) {
      if (x + a >= hi_) break;
      mark(x + a);
    }
    if (on_element_) on_element_(x);
  }

  BitStream& c_;
  DecodeLimits limits_;
  LabeledPrefix* labeled_;
  const std::function<void(std::uint64_t)>& on_element_;
  SumFreePrefix out_;
  std::vector<std::uint64_t> bits_;
  std::uint64_t lo_ = 1;
  std::uint64_t hi_ = 1;
  std::uint64_t pending_zeros_ = 0;
  std::uint64_t cur_mu_ = 0;
  std::uint64_t cur_alpha_ = 0;
  std::uint64_t consumed_ = 0;
};

}  // namespace

DecodeResult decode(BitStream& c, std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("decode: horizon must be >= 1");
  DecodeResult r;
  const std::function<void(std::uint64_t)> none;
  r.set = Decoder(c, DecodeLimits{horizon}, &r.labeled, none).run();
  return r;
}

SumFreePrefix decode_elements(BitStream& c, const DecodeLimits& limits,
                              const std::function<void(std::uint64_t)>& on_element) {
  if (limits.horizon < 1) throw std::invalid_argument("decode: horizon must be >= 1");
  if (limits.max_elements == 0) throw std::invalid_argument("decode: max_elements must be >= 1");
  return Decoder(c, limits, nullptr, on_element).run();
}

BitWord encode(std::span<const std::uint64_t> elements, std::uint64_t horizon) {
  if (elements.empty()) throw std::invalid_argument("encode: empty set");
  if (elements.front() == 0) throw std::invalid_argument("encode: members must be positive");
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i] <= elements[i - 1]) throw std::invalid_argument("encode: input not strictly increasing");
  }
  if (horizon < elements.back()) throw std::invalid_argument("encode: horizon below largest member");

  std::vector<std::uint64_t> sums((horizon + 64) / 64, 0);
  auto marked = [&](std::uint64_t x) { return (sums[x >> 6] >> (x & 63)) & 1; };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::uint64_t a = elements[i];
    if (2 * a > horizon) break;
    for (std::size_t j = i; j < elements.size() && a + elements[j] <= horizon; ++j) {
      const std::uint64_t x = a + elements[j];
      sums[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  for (auto x : elements) {
    if (marked(x)) throw NotSumFree(x, "encode: " + std::to_string(x) + " is a sum of two members");
  }

  BitWord word;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (next < elements.size() && elements[next] == n) {
      word.push_back(1);
      ++next;
    } else if (!marked(n)) {
      word.push_back(0);
    }
  }
  return word;
}

BitWord encode(const SumFreePrefix& s) {
  if (s.elements.empty()) throw std::invalid_argument("encode: empty set");
  return encode(s.elements, s.horizon ? s.horizon : s.elements.back());
}

GapProfile gap_profile(const LabeledPrefix& lp) {
  if (lp.labels.empty() || lp.labels.front() != Label::one) {
    throw InsufficientData("gap_profile: the first consumed bit must be 1");
  }
  GapProfile g;
  std::uint64_t mu = 0, alpha = 0;
  std::size_t ones = 0;
  for (auto l : lp.labels) {
    switch (l) {
      case Label::one:
        if (ones++ > 0) {
          g.mu.push_back(mu);
          g.alpha.push_back(alpha);
        }
        mu = alpha = 0;
        break;
      case Label::zero: ++mu; break;
      case Label::star: ++alpha; break;
    }
  }
  if (ones < 2) throw InsufficientData("gap_profile: need at least two members");
  return g;
}

std::vector<std::uint64_t> pairwise_sums(std::span<const std::uint64_t> elements, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i; j < elements.size(); ++j) {
      const std::uint64_t x = elements[i] + elements[j];
      if (x <= bound) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> read_sequence(std::istream& in) {
  std::vector<std::uint64_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::uint64_t v = 0;
    const char* b = line.data() + first;
    const char* e = line.data() + last + 1;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e) {
      throw std::invalid_argument("sequence file line " + std::to_string(line_no) + ": not a decimal integer");
    }
    if (!out.empty() && v <= out.back()) {
      throw std::invalid_argument("sequence file line " + std::to_string(line_no) + ": not strictly increasing");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> read_sequence_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sequence file: " + path.string());
  return read_sequence(in);
}

void write_sequence(std::ostream& out, std::span<const std::uint64_t> elements) {
  for (auto v : elements) out << v << '\n';
}

}  // namespace sumfree
