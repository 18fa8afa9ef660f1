#include "sumfree/regularity.hpp"

#include <algorithm>

#include "sumfree/errors.hpp"

namespace sumfree {

KernelFamily kernel_family(std::span<const BigInt> seq, unsigned k, unsigned depth, std::size_t window) {
  if (k < 2) throw std::invalid_argument("kernel_family: base must be >= 2");
  if (window == 0) throw std::invalid_argument("kernel_family: window must be >= 1");
  BigInt kd = pow_big(k, depth);
  if (kd * window + kd > seq.size()) throw InsufficientData("kernel_family: sequence too short");

  KernelFamily f{k, depth, window, {}};
  std::uint64_t stride = 1;
  for (unsigned i = 0; i <= depth; ++i, stride *= k) {
    for (std::uint64_t b = 0; b < stride; ++b) {
      std::vector<BigInt> w;
      w.reserve(window);
      for (std::size_t n = 0; n < window; ++n) w.push_back(seq[stride * n + b]);
      f.members.emplace(std::pair{i, b}, std::move(w));
    }
  }
  return f;
}

std::size_t rational_rank(std::span<const std::vector<BigInt>> vectors) {
  if (vectors.empty()) throw std::invalid_argument("rational_rank: empty input");
  const std::size_t cols = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != cols) throw std::invalid_argument("rational_rank: vectors differ in length");
  }
  std::vector<std::vector<BigInt>> a(vectors.begin(), vectors.end());
  const std::size_t rows = a.size();

  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const auto& p = a[rank];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      auto& row = a[r];
      const BigInt factor = row[col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        row[c] = (row[c] * p[col] - factor * p[c]) / prev;
      }
      row[col] = 0;
    }
    prev = p[col];
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> regularity_profile(std::span<const BigInt> seq, unsigned k, unsigned max_depth,
                                            std::size_t window) {
  const KernelFamily f = kernel_family(seq, k, max_depth, window);
  std::vector<std::size_t> ranks;
  std::vector<std::vector<BigInt>> rows;
  for (unsigned d = 1; d <= max_depth; ++d) {
    rows.clear();
    for (const auto& [key, w] : f.members) {
      if (key.first <= d) rows.push_back(w);
    }
    ranks.push_back(rational_rank(rows));
  }
  return ranks;
}

bool ranks_stabilize(std::span<const std::size_t> ranks, unsigned from, unsigned to) {
  if (from < 1 || to < from || to > ranks.size()) throw std::invalid_argument("ranks_stabilize: bad depth range");
  for (unsigned d = from + 1; d <= to; ++d) {
    if (ranks[d - 1] != ranks[from - 1]) return false;
  }
  return true;
}

std::vector<BigInt> to_big(std::span<const std::uint64_t> seq) { return {seq.begin(), seq.end()}; }

const char* to_string(RecurrenceKind kind) {
  switch (kind) {
    case RecurrenceKind::mu: return "mu";
    case RecurrenceKind::alpha: return "alpha";
    case RecurrenceKind::gap_sum: return "gap_sum";
  }
  return "?";
}

Report verify_recurrences(RecurrenceKind kind, const SumFreePrefix& data, std::uint64_t N,
                          const std::optional<SubstitutionParams>& params) {
  Report r;
  r.kind = to_string(kind);
  r.n = N;
  const std::uint64_t top = 2 * N;

  switch (kind) {
    case RecurrenceKind::mu: {
      if (!params) throw std::invalid_argument("verify_recurrences: mu kind needs substitution params");
      params->validate();
      r.params["subst"] = params->to_string();
      if (data.mu.size() < top) throw InsufficientData("verify_recurrences: mu must cover 1..2N");
      for (std::uint64_t i = 1; i <= top; ++i) {
        const BigInt expected =
            i % 2 == 0 ? BigInt(params->l3) * data.mu[i / 2 - 1] + params->l2 : BigInt(params->l1);
        if (expected != data.mu[i - 1]) r.fail(i, expected, data.mu[i - 1]);
      }
      break;
    }
    case RecurrenceKind::alpha: {
      if (data.alpha.size() < top) throw InsufficientData("verify_recurrences: alpha must cover 1..2N");
      for (std::uint64_t i = 1; i <= top; ++i) {
        const BigInt expected = i % 2 == 0 ? 3 * BigInt(data.alpha[i / 2 - 1]) - 1 : BigInt(1);
        if (expected != data.alpha[i - 1]) r.fail(i, expected, data.alpha[i - 1]);
      }
      break;
    }
    case RecurrenceKind::gap_sum: {
      if (data.elements.size() < top + 1 || data.mu.size() < top || data.alpha.size() < top) {
        throw InsufficientData("verify_recurrences: data must cover S_0..S_2N");
      }
      BigInt acc = 0;
      for (std::uint64_t n = 0; n <= top; ++n) {
        if (n > 0) acc += BigInt(data.mu[n - 1]) + data.alpha[n - 1];
        const BigInt expected = acc + (n + 1);
        if (expected != data.elements[n]) r.fail(n, expected, data.elements[n]);
      }
      break;
    }
  }
  return r;
}

ParityClass classify_parity(std::span<const int> bits) {
  for (int offset = 0; offset <= 1; ++offset) {
    if (std::all_of(bits.begin(), bits.end(), [&](int b) { return b == offset; })) {
      return {ParityClass::Kind::constant, offset};
    }
  }
  for (int offset = 0; offset <= 1; ++offset) {
    bool ok = true;
    for (std::size_t n = 0; ok && n < bits.size(); ++n) ok = bits[n] == (offset ^ digit_sum_parity(n));
    if (ok) return {ParityClass::Kind::digit_sum, offset};
  }
  return {ParityClass::Kind::other, 0};
}

const char* to_string(ParityClass::Kind kind) {
  switch (kind) {
    case ParityClass::Kind::constant: return "constant";
    case ParityClass::Kind::digit_sum: return "digit_sum";
    case ParityClass::Kind::other: return "other";
  }
  return "?";
}

Report parity_profile(std::span<const std::uint64_t> s, const SubstitutionParams& p, std::uint64_t N) {
  p.validate();
  if (!is_admissible(p)) throw std::invalid_argument("parity_profile: parameters not admissible");
  if (N == 0 || s.size() < 4 * N + 4) throw InsufficientData("parity_profile: S must cover 0..4N+3");

  Report r;
  r.kind = "parity";
  r.params["subst"] = p.to_string();
  r.n = N;

  const int h1 = static_cast<int>((s[1] - 1) & 1);
  const int h2 = static_cast<int>((s[2] - 1) & 1);
  const int slope = static_cast<int>((1 + p.l2 * p.l3) & 1);
  auto& classes = r.extra["classes"] = nlohmann::ordered_json::array();

  for (unsigned j = 0; j < 4; ++j) {
    const int j1 = j & 1, j2 = (j >> 1) & 1;
    const int offset = (1 + j2 * h2 + j1 * h1) & 1;
    const ParityClass predicted{slope ? ParityClass::Kind::digit_sum : ParityClass::Kind::constant, offset};

    std::vector<int> bits;
    bits.reserve(N);
    for (std::uint64_t n = 0; n < N; ++n) {
      const int actual = static_cast<int>(s[4 * n + j] & 1);
      bits.push_back(actual);
      const int expected = offset ^ (slope & digit_sum_parity(n));
      if (actual != expected) r.fail(4 * n + j, expected, actual, "residue " + std::to_string(j));
    }
    const ParityClass observed = classify_parity(bits);
    nlohmann::ordered_json c;
    c["j"] = j;
    c["predicted"] = to_string(predicted.kind);
    c["predicted_offset"] = predicted.offset;
    c["observed"] = to_string(observed.kind);
    c["observed_offset"] = observed.offset;
    classes.push_back(std::move(c));
  }
  std::sort(r.violations.begin(), r.violations.end(),
            [](const Violation& a, const Violation& b) { return a.index < b.index; });
  return r;
}

}  // namespace sumfree
