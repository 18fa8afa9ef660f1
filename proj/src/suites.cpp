#include "sumfree/suites.hpp"

#include <future>
#include <stdexcept>

#include "sumfree/base_change.hpp"
#include "sumfree/bijection.hpp"
#include "sumfree/closed_form.hpp"
#include "sumfree/regularity.hpp"

namespace sumfree {

std::unique_ptr<BitStream> make_stream(std::string_view spec, TailRule tail) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("source must look like kind:value");
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view value = spec.substr(colon + 1);
  if (kind == "subst") return std::make_unique<CantorLikeStream>(parse_substitution(value));
  if (kind == "periodic") {
    const auto slash = value.find('/');
    if (slash == std::string_view::npos) {
      BitWord tail_bits = parse_bit_word(value);
      if (tail_bits.empty()) throw std::invalid_argument("periodic source needs a nonempty word");
      return std::make_unique<PeriodicStream>(BitWord{}, std::move(tail_bits));
    }
    BitWord tail_bits = parse_bit_word(value.substr(slash + 1));
    if (tail_bits.empty()) throw std::invalid_argument("periodic source needs a nonempty tail");
    return std::make_unique<PeriodicStream>(parse_bit_word(value.substr(0, slash)), std::move(tail_bits));
  }
  if (kind == "file") return open_bit_file(std::string(value), tail);
  if (kind == "base-change") {
    const unsigned long b = std::stoul(std::string(value));
    return std::make_unique<BaseChangeStream>(static_cast<std::uint32_t>(b));
  }
  throw std::invalid_argument("unknown source kind '" + std::string(kind) + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"mu",     "alpha",  "conditions", "oracle",   "reflection",
                                                 "parity", "regularity", "sumset", "roundtrip"};
  return names;
}

namespace {

template <typename T>
T pick(T value, T fallback) {
  return value ? value : fallback;
}

SumFreePrefix decode_count(const SubstitutionParams& p, std::size_t count) {
  CantorLikeStream c(p);
  return decode_elements(c, DecodeLimits{~std::uint64_t{0} >> 2, count});
}

nlohmann::ordered_json subst_params(const SubstitutionParams& p) {
  nlohmann::ordered_json j;
  j["subst"] = p.to_string();
  return j;
}

// Scanned mu against the closed form, then the doubling recurrence.
Report suite_mu(const SuiteOptions& o) {
  const std::uint64_t n = pick<std::uint64_t>(o.count, 512);
  Report r;
  r.kind = "mu";
  r.params = subst_params(o.subst);
  r.n = n;
  SumFreePrefix data;
  data.mu = scan_mu(o.subst, 2 * n);
  for (std::uint64_t i = 1; i <= 2 * n; ++i) {
    const BigNat expected = mu_closed_form(i, o.subst);
    if (expected != data.mu[i - 1]) r.fail(i, expected, data.mu[i - 1], "closed form");
  }
  for (auto& v : verify_recurrences(RecurrenceKind::mu, data, n, o.subst).violations) {
    r.fail(v.index, v.expected, v.actual, "recurrence");
  }
  return r;
}

Report suite_alpha(const SuiteOptions& o) {
  const std::uint64_t n = pick<std::uint64_t>(o.count, 512);
  Report r;
  r.kind = "alpha";
  r.params = subst_params(o.subst);
  r.n = n;
  const SumFreePrefix data = decode_count(o.subst, 2 * n + 1);
  for (std::uint64_t i = 1; i <= 2 * n; ++i) {
    const BigNat expected = alpha_closed(i);
    if (expected != data.alpha[i - 1]) r.fail(i, expected, data.alpha[i - 1], "closed form");
  }
  for (auto& v : verify_recurrences(RecurrenceKind::alpha, data, n).violations) {
    r.fail(v.index, v.expected, v.actual, "recurrence");
  }
  return r;
}

Report suite_conditions(const SuiteOptions& o) {
  const unsigned big_m = pick(o.m, 8u);
  Report r;
  r.kind = "conditions";
  r.params = subst_params(o.subst);
  r.params["M"] = big_m;
  r.n = big_m;
  const auto mu = scan_mu(o.subst, std::size_t{2} << big_m);
  const GrowthReport g = check_growth_condition(mu, big_m);
  for (const auto& f : g.failures) {
    r.fail(f.index, f.bound, f.value,
           std::string(f.clause == GrowthFailure::Clause::growth ? "growth" : "periodic") + " clause, m=" +
               std::to_string(f.m));
  }
  r.extra["admissible"] = is_admissible(o.subst);
  return r;
}

// Closed forms for S_n and alpha_n against the decoder.
Report suite_oracle(const SuiteOptions& o) {
  const std::uint64_t n = pick<std::uint64_t>(o.count, 1024);
  Report r;
  r.kind = "oracle";
  r.params = subst_params(o.subst);
  r.n = n;
  const SumFreePrefix data = decode_count(o.subst, n);
  unsigned bits = 1;
  while ((std::uint64_t{1} << bits) < n) ++bits;
  std::vector<BigNat> h;
  for (unsigned i = 1; i <= bits; ++i) h.push_back(h_cantor_closed(i, o.subst));
  NumerationSystem ns;
  try {
    ns = NumerationSystem(std::move(h));
  } catch (const std::invalid_argument&) {
    r.fail(0, 0, 0, "closed-form weights are not a numeration system");
    return r;
  }
  for (std::uint64_t i = 0; i < n; ++i) {
    const BigNat s = s_closed(i, ns);
    if (s != data.elements[i]) r.fail(i, s, data.elements[i], "S_n");
    if (i >= 1 && i <= data.alpha.size()) {
      const BigNat a = alpha_closed(i);
      if (a != data.alpha[i - 1]) r.fail(i, a, data.alpha[i - 1], "alpha_n");
    }
  }
  return r;
}

Report suite_reflection(const SuiteOptions& o) {
  const unsigned max_m = pick(o.m, 7u);
  Report r;
  r.kind = "reflection";
  r.params = subst_params(o.subst);
  r.params["m"] = max_m;
  r.n = max_m;
  const SumFreePrefix data = decode_count(o.subst, (std::size_t{2} << max_m) + 1);
  for (unsigned m = 1; m <= max_m; ++m) {
    for (auto& v : verify_reflection_windows(data.elements, m).violations) {
      r.fail(v.index, v.expected, v.actual, v.detail + ", m=" + std::to_string(m));
    }
  }
  return r;
}

Report suite_parity(const SuiteOptions& o) {
  const std::uint64_t n = pick<std::uint64_t>(o.count, 256);
  const SumFreePrefix data = decode_count(o.subst, 4 * n + 4);
  return parity_profile(data.elements, o.subst, n);
}

Report suite_regularity(const SuiteOptions& o) {
  const unsigned depth = pick(o.depth, 6u);
  const std::size_t window = pick<std::size_t>(o.window, 256);
  if (depth < 3) throw std::invalid_argument("regularity suite needs depth >= 3");
  const std::size_t len = (std::size_t{1} << depth) * (window + 1);
  const SumFreePrefix data = decode_count(o.subst, len + 1);

  Report r;
  r.kind = "regularity";
  r.params = subst_params(o.subst);
  r.params["depth"] = depth;
  r.params["window"] = window;
  r.n = len;
  // mu and alpha start at index 1; slot 0 is padded with 0.
  std::vector<std::uint64_t> mu(1, 0), alpha(1, 0);
  mu.insert(mu.end(), data.mu.begin(), data.mu.end());
  alpha.insert(alpha.end(), data.alpha.begin(), data.alpha.end());
  const auto s_ranks = regularity_profile(to_big(data.elements), 2, depth, window);
  const auto mu_ranks = regularity_profile(to_big(mu), 2, depth, window);
  const auto alpha_ranks = regularity_profile(to_big(alpha), 2, depth, window);
  r.ranks = s_ranks;
  r.extra["mu_ranks"] = mu_ranks;
  r.extra["alpha_ranks"] = alpha_ranks;
  auto check = [&](const std::vector<std::size_t>& ranks, std::uint64_t index, const char* what) {
    if (!ranks_stabilize(ranks, depth - 2, depth)) {
      r.fail(index, ranks[depth - 3], ranks[depth - 1], std::string(what) + " kernel rank not stable");
    }
  };
  check(s_ranks, 0, "S");
  check(mu_ranks, 1, "mu");
  check(alpha_ranks, 2, "alpha");
  return r;
}

Report suite_sumset(const SuiteOptions& o) {
  return verify_sumset_structure(o.b, pick<std::uint64_t>(o.horizon, 10000));
}

Report suite_roundtrip(const SuiteOptions& o) {
  const std::uint64_t horizon = pick<std::uint64_t>(o.horizon, 100000);
  Report r;
  r.kind = "roundtrip";
  r.params["source"] = o.source;
  r.n = horizon;
  auto c = make_stream(o.source);
  const SumFreePrefix s = decode_elements(*c, DecodeLimits{horizon});
  auto again = make_stream(o.source);
  const BitWord prefix = take(*again, s.consumed);
  if (s.elements.empty()) {
    if (std::find(prefix.begin(), prefix.end(), 1) != prefix.end()) r.fail(0, 0, 1, "no members decoded");
    return r;
  }
  const BitWord word = encode(s);
  const std::size_t common = std::min(word.size(), prefix.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (word[i] != prefix[i]) {
      r.fail(i, prefix[i], word[i], "bit mismatch");
      return r;
    }
  }
  if (word.size() != prefix.size()) r.fail(common, prefix.size(), word.size(), "length mismatch");
  return r;
}

}  // namespace

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  opts.subst.validate();
  if (name == "mu") return suite_mu(opts);
  if (name == "alpha") return suite_alpha(opts);
  if (name == "conditions") return suite_conditions(opts);
  if (name == "oracle") return suite_oracle(opts);
  if (name == "reflection") return suite_reflection(opts);
  if (name == "parity") return suite_parity(opts);
  if (name == "regularity") return suite_regularity(opts);
  if (name == "sumset") return suite_sumset(opts);
  if (name == "roundtrip") return suite_roundtrip(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<Report> run_all_suites(const SuiteOptions& opts) {
  std::vector<std::future<Report>> jobs;
  for (const auto& name : suite_names()) {
    jobs.push_back(std::async(std::launch::async, [name, opts] { return run_suite(name, opts); }));
  }
  std::vector<Report> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace sumfree
