#include "sumfree/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumfree/base_change.hpp"
#include "sumfree/bijection.hpp"
#include "sumfree/closed_form.hpp"
#include "sumfree/suites.hpp"

namespace sumfree {

namespace {

using json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultHorizonCap = std::uint64_t{1} << 32;
// Label arrays take one byte per integer.
constexpr std::uint64_t kLabelCap = std::uint64_t{1} << 28;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t horizon_cap() {
  const char* env = std::getenv(kHorizonCapEnv);
  if (!env || !*env) return kDefaultHorizonCap;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw UsageError(std::string(kHorizonCapEnv) + " is not a number");
  }
}

// Writes to --output when given, else to the data channel.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

struct DecodeArgs {
  std::string source;
  std::uint64_t horizon = 0;
  std::size_t count = 0;
  std::string emit = "plain";
  bool labels = false;
  std::string tail = "none";
  std::string output;
};

int cmd_decode(const DecodeArgs& a, std::ostream& out) {
  const std::uint64_t cap = horizon_cap();
  if (a.horizon == 0 && a.count == 0) throw UsageError("decode needs --horizon or --count");
  const std::uint64_t horizon = a.horizon ? a.horizon : cap;
  if (horizon > cap) throw UsageError("horizon exceeds cap " + std::to_string(cap) + " (set " + kHorizonCapEnv + ")");
  const auto tail = parse_tail_rule(a.tail);
  if (!tail) throw UsageError("unknown tail rule '" + a.tail + "'");
  auto stream = make_stream(a.source, *tail);
  Sink sink(a.output, out);
  std::ostream& os = sink.get();

  if (a.labels) {
    if (a.count) throw UsageError("--labels works with --horizon only");
    if (horizon > kLabelCap) throw UsageError("--labels supports horizons up to " + std::to_string(kLabelCap));
    const DecodeResult r = decode(*stream, horizon);
    if (a.emit == "json") {
      json j;
      j["schema"] = kReportSchema;
      j["source"] = a.source;
      j["horizon"] = r.set.horizon;
      j["consumed"] = r.set.consumed;
      j["elements"] = r.set.elements;
      j["mu"] = r.set.mu;
      j["alpha"] = r.set.alpha;
      j["labels"] = r.labeled.to_string();
      os << j.dump() << '\n';
    } else {
      write_sequence(os, r.set.elements);
      os << "# labels " << r.labeled.to_string() << '\n';
    }
    return kExitOk;
  }

  const DecodeLimits limits{horizon, a.count ? a.count : std::numeric_limits<std::size_t>::max()};
  if (a.emit == "json") {
    const SumFreePrefix s = decode_elements(*stream, limits);
    json j;
    j["schema"] = kReportSchema;
    j["source"] = a.source;
    j["horizon"] = s.horizon;
    j["consumed"] = s.consumed;
    j["elements"] = s.elements;
    j["mu"] = s.mu;
    j["alpha"] = s.alpha;
    os << j.dump() << '\n';
  } else {
    decode_elements(*stream, limits, [&os](std::uint64_t x) { os << x << '\n'; });
  }
  return kExitOk;
}

int cmd_encode(const std::string& input, std::uint64_t horizon, const std::string& output, std::ostream& out) {
  const auto elements = read_sequence_file(input);
  if (elements.empty()) throw UsageError("sequence file has no elements");
  const std::uint64_t h = horizon ? horizon : elements.back();
  if (h > horizon_cap()) throw UsageError("horizon exceeds cap");
  Sink sink(output, out);
  sink.get() << to_string(encode(elements, h)) << '\n';
  return kExitOk;
}

int cmd_closed_form(const std::string& subst, std::uint64_t count, const std::string& emit, std::ostream& out,
                    std::ostream& err) {
  const SubstitutionParams p = parse_substitution(subst);
  if (count == 0) throw UsageError("--count must be >= 1");
  const bool admissible = is_admissible(p);
  if (!admissible) err << "note: parameters " << p.to_string() << " are not admissible; closed forms may not match the decoded set\n";
  unsigned bits = 1;
  while ((std::uint64_t{1} << bits) < count) ++bits;
  std::vector<BigNat> h;
  for (unsigned i = 1; i <= bits; ++i) h.push_back(h_cantor_closed(i, p));
  const NumerationSystem ns(h);

  if (emit == "json") {
    json j;
    j["schema"] = kReportSchema;
    j["subst"] = p.to_string();
    j["admissible"] = admissible;
    auto& hj = j["h"] = json::array();
    for (const auto& x : h) hj.push_back(big_to_json(x));
    auto& rows = j["rows"] = json::array();
    for (std::uint64_t n = 0; n < count; ++n) {
      json row;
      row["n"] = n;
      row["S"] = big_to_json(s_closed(n, ns));
      if (n >= 1) {
        row["mu"] = big_to_json(mu_closed_form(n, p));
        row["alpha"] = big_to_json(alpha_closed(n));
      }
      rows.push_back(std::move(row));
    }
    out << j.dump() << '\n';
  } else {
    out << "# subst " << p.to_string() << (admissible ? "" : " (not admissible)") << '\n';
    out << "# h";
    for (const auto& x : h) out << ' ' << x;
    out << "\n# n S_n mu_n alpha_n\n";
    for (std::uint64_t n = 0; n < count; ++n) {
      out << n << ' ' << s_closed(n, ns);
      if (n >= 1) {
        out << ' ' << mu_closed_form(n, p) << ' ' << alpha_closed(n);
      } else {
        out << " - -";
      }
      out << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, SuiteOptions opts, const std::string& subst, std::ostream& out) {
  if (!subst.empty()) opts.subst = parse_substitution(subst);
  if (opts.horizon > horizon_cap()) throw UsageError("horizon exceeds cap");
  if (suite == "all") {
    const auto reports = run_all_suites(opts);
    const json j = merge_reports(reports);
    out << j.dump(2) << '\n';
    return j["pass"].get<bool>() ? kExitOk : kExitVerifyFailed;
  }
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  const Report r = run_suite(suite, opts);
  out << to_json(r).dump(2) << '\n';
  return r.pass ? kExitOk : kExitVerifyFailed;
}

int cmd_automaton(std::uint32_t b, const std::string& format, std::ostream& out) {
  const Dfao a = membership_automaton(b);
  if (format == "dot") {
    out << a.to_dot();
  } else {
    out << a.to_table();
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-free sets from zero-one sequences: decoding, closed forms and verification"};
  app.require_subcommand(1);

  DecodeArgs dec;
  auto* decode_cmd = app.add_subcommand("decode", "Decode a zero-one sequence into its sum-free set");
  decode_cmd->add_option("--source", dec.source, "subst:l1,l2,l3 | periodic:W | periodic:P/W | file:PATH | base-change:B")
      ->required();
  decode_cmd->add_option("--horizon", dec.horizon, "Label the integers 1..H");
  decode_cmd->add_option("--count", dec.count, "Stop after this many members");
  decode_cmd->add_option("--emit", dec.emit, "plain or json")->check(CLI::IsMember({"plain", "json"}));
  decode_cmd->add_flag("--labels", dec.labels, "Also emit the ternary labeling");
  decode_cmd->add_option("--tail", dec.tail, "File sources: none | zeros | ones | repeat");
  decode_cmd->add_option("--output", dec.output, "Write data here instead of stdout");

  std::string enc_input, enc_output;
  std::uint64_t enc_horizon = 0;
  auto* encode_cmd = app.add_subcommand("encode", "Encode a sequence file back to its zero-one word");
  encode_cmd->add_option("--input", enc_input, "Sequence file")->required();
  encode_cmd->add_option("--horizon", enc_horizon, "Set is complete up to H (default: largest member)");
  encode_cmd->add_option("--output", enc_output, "Write data here instead of stdout");

  std::string cf_subst, cf_emit = "plain";
  std::uint64_t cf_count = 16;
  auto* cf_cmd = app.add_subcommand("closed-form", "Tabulate h(n), S_n, mu_n and alpha_n from the closed forms");
  cf_cmd->add_option("--subst", cf_subst, "l1,l2,l3")->required();
  cf_cmd->add_option("--count", cf_count, "Rows n = 0..count-1");
  cf_cmd->add_option("--emit", cf_emit, "plain or json")->check(CLI::IsMember({"plain", "json"}));

  std::string suite, v_subst;
  SuiteOptions opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify_cmd->add_option("--suite", suite, "mu | alpha | conditions | oracle | reflection | parity | regularity | sumset | roundtrip | all")
      ->required();
  verify_cmd->add_option("--subst", v_subst, "l1,l2,l3 (default 3,0,5)");
  verify_cmd->add_option("--b", opts.b, "Base for the sumset suite");
  verify_cmd->add_option("--horizon", opts.horizon, "Horizon for sumset/roundtrip");
  verify_cmd->add_option("--count", opts.count, "Index bound N");
  verify_cmd->add_option("--m", opts.m, "Largest m for reflection/conditions");
  verify_cmd->add_option("--depth", opts.depth, "Kernel depth for regularity");
  verify_cmd->add_option("--window", opts.window, "Kernel window for regularity");
  verify_cmd->add_option("--source", opts.source, "Source for roundtrip");

  std::uint32_t aut_b = 2;
  std::string aut_format = "table";
  auto* aut_cmd = app.add_subcommand("automaton", "Print the membership automaton of the base-change set");
  aut_cmd->add_option("--b", aut_b, "Base b >= 2");
  aut_cmd->add_option("--format", aut_format, "table or dot")->check(CLI::IsMember({"table", "dot"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (decode_cmd->parsed()) return cmd_decode(dec, out);
    if (encode_cmd->parsed()) return cmd_encode(enc_input, enc_horizon, enc_output, out);
    if (cf_cmd->parsed()) return cmd_closed_form(cf_subst, cf_count, cf_emit, out, err);
    if (verify_cmd->parsed()) return cmd_verify(suite, opts, v_subst, out);
    if (aut_cmd->parsed()) return cmd_automaton(aut_b, aut_format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sumfree
