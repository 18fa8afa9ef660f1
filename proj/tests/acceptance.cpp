// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sumfree/base_change.hpp"
#include "sumfree/bijection.hpp"
#include "sumfree/closed_form.hpp"
#include "sumfree/regularity.hpp"
#include "sumfree/substitution.hpp"

using namespace sumfree;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string note;  // printed on success

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SumFreePrefix decode_subst(const SubstitutionParams& p, std::size_t count) {
  CantorLikeStream c(p);
  return decode_elements(c, DecodeLimits{std::uint64_t{1} << 62, count});
}

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

const SubstitutionParams kOracleParams[] = {{3, 0, 5}, {1, 1, 5}, {2, 0, 4}, {0, 4, 5}};

// 1. The sixteen listed elements for the 3,0,5 fixed point, under a second.
Outcome listed_prefix_305() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto s = decode_subst({3, 0, 5}, 16);
  const double took = seconds_since(t0);
  const std::vector<std::uint64_t> listed{1, 6, 24, 29, 110, 115, 133, 138, 528, 533, 551, 556, 637, 642, 660, 665};
  o.require(s.elements == listed, "decoded prefix differs from the listed elements");
  o.require(took < 1.0, "took " + str(took) + " s");
  return o;
}

// 2. encode(decode(c, 1e5)) equals the consumed prefix of c, per stream under 5 s.
Outcome round_trips() {
  Outcome o;
  const std::uint64_t horizon = 100000;
  double slowest = 0;
  auto check = [&](BitStream& c, const std::function<std::string(std::uint64_t)>& expected, const std::string& name) {
    const auto t0 = Clock::now();
    const auto r = decode(c, horizon);
    const std::string got = to_string(encode(r.set.elements, horizon));
    const double took = seconds_since(t0);
    slowest = std::max(slowest, took);
    o.require(got == expected(r.labeled.consumed), name + ": round trip differs from consumed prefix");
    o.require(took < 5.0, name + ": took " + str(took) + " s");
  };
  for (const auto& p : {SubstitutionParams{3, 0, 5}, SubstitutionParams{1, 1, 5}, SubstitutionParams{2, 0, 4}}) {
    CantorLikeStream c(p);
    check(c, [&](std::uint64_t n) { return oracle::fixed_point(p.l1, p.l2, p.l3, n); }, "subst:" + p.to_string());
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 25; ++i) {
    const auto pc = oracle::random_periodic(rng);
    PeriodicStream c(parse_bit_word(pc.prefix), parse_bit_word(pc.period));
    check(c,
          [&](std::uint64_t n) {
            std::string w;
            for (std::uint64_t k = 0; k < n; ++k) w += pc.at(k) ? '1' : '0';
            return w;
          },
          "periodic:" + pc.prefix + "/" + pc.period);
  }
  o.note = "28 streams, slowest " + str(slowest) + " s";
  return o;
}

// 3. S_n from the digit formula and alpha_n from the valuation formula match the
//    decoder for n < 2^10.
Outcome closed_form_oracle() {
  Outcome o;
  for (const auto& p : kOracleParams) {
    const std::string name = p.to_string();
    const auto s = decode_subst(p, 1024);
    o.require(s.elements.size() == 1024, name + ": short decode");
    if (!o.pass) return o;

    // Tie the decoder to the quadratic oracle on an initial stretch.
    const std::string bits = oracle::fixed_point(p.l1, p.l2, p.l3, 20000);
    const auto naive = oracle::decode_word(bits, 20000);
    o.require(std::equal(naive.elements.begin(), naive.elements.end(), s.elements.begin()),
              name + ": decoder disagrees with the quadratic oracle");

    const auto from_gaps = h_from_gaps(s.mu, s.alpha, 10);
    for (unsigned n = 1; n <= 10; ++n)
      o.require(from_gaps.weight(n) == h_cantor_closed(n, p), name + ": h(" + str(n) + ") mismatch");
    for (std::uint64_t n = 0; n < 1024; ++n)
      o.require(s_closed(n, from_gaps) == s.elements[n], name + ": S_" + str(n) + " mismatch");
    for (std::uint64_t n = 1; n < 1024; ++n)
      o.require(alpha_closed(n) == s.alpha[n - 1], name + ": alpha_" + str(n) + " mismatch");
  }
  return o;
}

// 4. Scanned gaps equal the closed form and satisfy the doubling recurrences.
Outcome gap_closed_form() {
  Outcome o;
  for (const auto& p : kOracleParams) {
    const std::string name = p.to_string();
    const auto mu = scan_mu(p, 2048);
    const auto naive = oracle::gaps_of(oracle::fixed_point(p.l1, p.l2, p.l3, 2000000));
    for (std::size_t i = 0; i < naive.size(); ++i)
      o.require(mu[i] == naive[i], name + ": scan disagrees with rewriting at mu_" + str(i + 1));
    for (std::uint64_t n = 1; n < 1024; ++n) {
      o.require(mu_closed_form(n, p) == mu[n - 1], name + ": mu_" + str(n) + " closed form");
      o.require(mu[2 * n - 1] == p.l3 * mu[n - 1] + p.l2, name + ": mu_2n recurrence at n=" + str(n));
      o.require(mu[2 * n] == p.l1, name + ": mu_2n+1 recurrence at n=" + str(n));
    }
  }
  return o;
}

// 5. sum_{i<2^m} alpha_i = (3^m - 1)/2 for m <= 10.
Outcome star_sums() {
  Outcome o;
  for (const auto& p : kOracleParams) {
    const auto s = decode_subst(p, 1024);
    BigNat sum = 0;
    std::size_t i = 0;
    for (unsigned m = 1; m <= 10; ++m) {
      for (; i < (std::size_t{1} << m) - 1; ++i) sum += s.alpha[i];
      o.require(sum == (pow_big(3, m) - 1) / 2, p.to_string() + ": star sum at m=" + str(m));
    }
  }
  return o;
}

// 6. Window equalities for m <= 7, and every single-element shift breaks one.
Outcome reflection_windows() {
  Outcome o;
  const auto s = decode_subst({3, 0, 5}, 257);
  auto all_pass = [](const std::vector<std::uint64_t>& e) {
    for (unsigned m = 1; m <= 7; ++m)
      if (!verify_reflection_windows(e, m).pass) return false;
    return true;
  };
  o.require(all_pass(s.elements), "unmodified decode fails a window equality");
  // Elements S_0..S_255 are the ones the windows for m <= 7 read. Every
  // order-preserving shift by +-1 is tried; all misses are listed.
  int mutations = 0;
  std::string missed;
  for (std::size_t i = 0; i < 256; ++i) {
    for (int delta : {+1, -1}) {
      auto bad = s.elements;
      bad[i] += delta;
      if ((i > 0 && bad[i] <= bad[i - 1]) || bad[i] >= bad[i + 1] || bad[i] == 0) continue;
      ++mutations;
      if (all_pass(bad)) missed += (missed.empty() ? "" : ", ") + std::string("S_") + str(i) + (delta > 0 ? "+1" : "-1");
    }
  }
  o.require(mutations > 256, "too few mutations tried");
  o.require(missed.empty(), "undetected shifts of " + str(mutations) + " tried: " + missed);
  return o;
}

// 7. Parity laws.
Outcome parity_laws() {
  Outcome o;
  const auto a = decode_subst({3, 0, 5}, 1024);
  for (std::uint64_t n = 0; n < 1024; ++n)
    o.require(a.elements[n] % 2 == static_cast<std::uint64_t>(1 ^ oracle::popcount_parity(n)),
              "3,0,5: parity of S_" + str(n));
  o.require(parity_profile(a.elements, {3, 0, 5}, 255).pass, "3,0,5: parity profile");

  const auto b = decode_subst({2, 0, 4}, 2048);
  std::vector<int> even, odd;
  for (std::uint64_t n = 0; n < 1024; ++n) {
    even.push_back(static_cast<int>(b.elements[2 * n] % 2));
    odd.push_back(static_cast<int>(b.elements[2 * n + 1] % 2));
  }
  o.require(even == odd, "2,0,4: even and odd subsequences differ mod 2");
  const auto ce = classify_parity(even);
  o.require(ce.kind == ParityClass::Kind::digit_sum && classify_parity(odd) == ce,
            "2,0,4: subsequences do not follow one digit-sum law");
  o.require(parity_profile(b.elements, {2, 0, 4}, 511).pass, "2,0,4: parity profile");

  std::vector<BigNat> pow2;
  for (int i = 1; i <= 10; ++i) pow2.push_back(pow_big(2, i));
  const NumerationSystem ns(pow2);
  for (std::uint64_t n = 0; n < 1024; ++n) o.require(s_closed(n, ns) % 2 == 1, "2^i system: S_" + str(n) + " even");
  return o;
}

// 8. mu_n = 3^{n-1}: S_n = (3^n - 1)/2 + (n+1)(n+2)/2 for n <= 15, all by sieve.
Outcome fast_growth() {
  Outcome o;
  auto gap = [](std::uint64_t n) {
    std::uint64_t g = 1;
    for (std::uint64_t i = 1; i < n; ++i) g *= 3;
    return g;
  };
  GapStream c(gap, "powers of 3");
  const auto s = decode_elements(c, DecodeLimits{std::uint64_t{1} << 40, 16});
  o.require(s.elements.size() == 16, "short decode");
  if (!o.pass) return o;
  std::vector<std::uint64_t> mu;
  for (std::uint64_t n = 1; n <= 15; ++n) mu.push_back(gap(n));
  for (std::uint64_t n = 0; n <= 15; ++n) {
    const BigNat want = (pow_big(3, static_cast<unsigned>(n)) - 1) / 2 + (n + 1) * (n + 2) / 2;
    o.require(s.elements[n] == want, "S_" + str(n) + " differs from the formula");
    o.require(s_fast_growth(mu, n) == want, "s_fast_growth at n=" + str(n));
  }
  // Independent quadratic decode for n <= 10.
  std::string word = "1";
  for (std::uint64_t n = 1; n <= 10; ++n) word += std::string(gap(n), '0') + "1";
  const auto naive = oracle::decode_word(word, s.elements[10]);
  o.require(naive.elements.size() == 11 && std::equal(naive.elements.begin(), naive.elements.end(), s.elements.begin()),
            "quadratic oracle disagrees for n <= 10");
  return o;
}

// 9. Base-change sets for b = 2..5 on [1, 1e5], plus the Cantor sequence match.
Outcome base_change_sets() {
  Outcome o;
  const auto t0 = Clock::now();
  const std::uint64_t horizon = 100000;
  for (std::uint32_t b = 2; b <= 5; ++b) {
    const std::string name = "b=" + str(b);
    o.require(verify_sumset_structure(b, horizon).pass, name + ": sumset report fails");

    // Independent enumeration: members by definition, sums by brute force.
    std::vector<std::uint64_t> members;
    for (std::uint64_t m = 0;; ++m) {
      std::uint64_t v = 0;
      for (auto d : oracle::digits(m, b)) v = v * (2 * b - 1) + d;
      v = v * (2 * b - 1) + 1;
      if (v > horizon) break;
      members.push_back(v);
    }
    std::vector<bool> is_sum(horizon + 1, false);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i; j < members.size() && members[i] + members[j] <= horizon; ++j)
        is_sum[members[i] + members[j]] = true;
    for (auto x : members) o.require(!is_sum[x], name + ": " + str(x) + " is a pairwise sum");
    for (std::uint64_t x = 1; x <= horizon; ++x)
      o.require(is_sum[x] == (x >= 2 && (x - 2) % (2 * b - 1) == 0), name + ": sum set differs at " + str(x));

    const Dfao a = membership_automaton(b);
    std::size_t k = 0;
    for (std::uint64_t n = 0; n < horizon; ++n) {
      const bool member = k < members.size() && members[k] == n;
      if (member) ++k;
      o.require((dfao_run(a, base_digits(n, 2 * b - 1)) == 1) == member, name + ": automaton wrong at " + str(n));
      o.require(is_base_change_member(n, b) == member, name + ": digit inspection wrong at " + str(n));
    }
  }
  o.require(to_string(bitstream_from_base_change(2, 10000)) == oracle::fixed_point(1, 0, 3, 10000),
            "b=2 bits differ from the Cantor sequence");
  const double took = seconds_since(t0);
  o.require(took < 30.0, "took " + str(took) + " s");
  return o;
}

// 10. Kernel ranks of S, mu, alpha for 3,0,5 stabilize over depths 4..6 on
//     windows of 256; a random control keeps growing.
//
// The stabilized ranks below were recorded from the first run of this check
// (every depth 1..6 gave the same value).
constexpr std::size_t kRankS = 3;
constexpr std::size_t kRankMu = 2;
constexpr std::size_t kRankAlpha = 3;

Outcome regularity_evidence() {
  Outcome o;
  const unsigned depth = 6;
  const std::size_t window = 256;
  const std::size_t len = (std::size_t{1} << depth) * (window + 1);
  const auto s = decode_subst({3, 0, 5}, len);
  o.require(s.elements.size() == len, "short decode");
  if (!o.pass) return o;

  auto padded = [&](const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> out{0};
    out.insert(out.end(), v.begin(), v.end());
    return to_big(out);
  };
  const auto rs = regularity_profile(to_big(s.elements), 2, depth, window);
  const auto rm = regularity_profile(padded(s.mu), 2, depth, window);
  const auto ra = regularity_profile(padded(s.alpha), 2, depth, window);
  auto show = [](const std::vector<std::size_t>& r) {
    std::string t;
    for (auto x : r) t += (t.empty() ? "" : ",") + str(x);
    return t;
  };
  std::printf("     ranks S=[%s] mu=[%s] alpha=[%s]\n", show(rs).c_str(), show(rm).c_str(), show(ra).c_str());
  o.require(ranks_stabilize(rs, 4, 6), "S ranks do not stabilize");
  o.require(ranks_stabilize(rm, 4, 6), "mu ranks do not stabilize");
  o.require(ranks_stabilize(ra, 4, 6), "alpha ranks do not stabilize");
  o.require(rs.back() == kRankS && rm.back() == kRankMu && ra.back() == kRankAlpha,
            "stabilized ranks differ from the recorded values");

  std::mt19937_64 rng(424242);
  std::vector<BigInt> noise;
  for (std::size_t i = 0; i < 16 * (window + 1); ++i) noise.emplace_back(rng() % 1000000007);
  const auto rn = regularity_profile(noise, 2, 4, window);
  for (std::size_t d = 1; d < rn.size(); ++d) o.require(rn[d] > rn[d - 1], "random control stops growing");
  return o;
}

// 11. The 1,1,5 fixed point decodes to 1, 4, 13, 16, not to 1, 3, 15, 17 as
//     printed in one published example (that list contradicts the closed form
//     h(1) = 3, h(2) = 12).
Outcome fixed_point_115() {
  Outcome o;
  const auto s = decode_subst({1, 1, 5}, 4);
  const std::vector<std::uint64_t> derived{1, 4, 13, 16};
  const std::vector<std::uint64_t> printed{1, 3, 15, 17};
  o.require(s.elements == derived, "decoder does not give 1,4,13,16");
  o.require(s.elements != printed, "decoder matches the inconsistent printed list");
  o.require(h_cantor_closed(1, {1, 1, 5}) == 3 && h_cantor_closed(2, {1, 1, 5}) == 12, "closed-form h differs");
  const auto naive = oracle::decode_word(oracle::fixed_point(1, 1, 5, 100), 16);
  o.require(naive.elements == derived, "quadratic oracle does not give 1,4,13,16");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"listed prefix of the 3,0,5 fixed point", listed_prefix_305},
      {"round trip at H=1e5", round_trips},
      {"S_n and alpha_n closed forms vs decoder, n<2^10", closed_form_oracle},
      {"gap closed form and doubling recurrences, n<2^10", gap_closed_form},
      {"star sums (3^m-1)/2, m<=10", star_sums},
      {"reflection windows m<=7 and mutation detection", reflection_windows},
      {"parity laws", parity_laws},
      {"fast-growth formula, n<=15", fast_growth},
      {"base-change sets b=2..5, H=1e5", base_change_sets},
      {"2-kernel rank stabilization", regularity_evidence},
      {"1,1,5 fixed point prefix", fixed_point_115},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double took = seconds_since(t0);
    const std::string& said = o.pass ? o.note : o.detail;
    std::printf("%s %2d  %-52s %7.2fs%s%s\n", o.pass ? "PASS" : "FAIL", index, c.name, took,
                said.empty() ? "" : "  ", said.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
