#include "sumfree/base_change.hpp"

#include <sstream>

namespace sumfree {

namespace {

void check_b(std::uint32_t b) {
  if (b < 2 || 2 * b - 1 > 36) throw std::invalid_argument("base change: b must be in [2, 18]");
}

}  // namespace

void Dfao::validate() const {
  if (states.empty()) throw std::invalid_argument("dfao: no states");
  if (initial >= states.size()) throw std::invalid_argument("dfao: bad initial state");
  if (transitions.size() != states.size()) throw std::invalid_argument("dfao: transition table size mismatch");
  for (const auto& row : transitions) {
    if (row.size() != alphabet) throw std::invalid_argument("dfao: transitions not total");
    for (auto t : row) {
      if (t >= states.size()) throw std::invalid_argument("dfao: transition to unknown state");
    }
  }
}

std::string Dfao::to_table() const {
  std::ostringstream out;
  out << "# states " << states.size() << " alphabet " << alphabet << " initial " << states[initial].name << '\n';
  out << "state output";
  for (std::uint32_t d = 0; d < alphabet; ++d) out << ' ' << d;
  out << '\n';
  for (std::size_t s = 0; s < states.size(); ++s) {
    out << states[s].name << ' ' << states[s].output;
    for (auto t : transitions[s]) out << ' ' << states[t].name;
    out << '\n';
  }
  return out.str();
}

std::string Dfao::to_dot() const {
  std::ostringstream out;
  out << "digraph dfao {\n  rankdir=LR;\n  start [shape=point];\n";
  for (const auto& s : states) {
    out << "  " << s.name << " [shape=circle,label=\"" << s.name << "/" << s.output << "\"];\n";
  }
  out << "  start -> " << states[initial].name << ";\n";
  for (std::size_t s = 0; s < states.size(); ++s) {
    // One edge per target, labelled with its digits.
    for (std::size_t t = 0; t < states.size(); ++t) {
      std::string digits;
      for (std::uint32_t d = 0; d < alphabet; ++d) {
        if (transitions[s][d] != t) continue;
        if (!digits.empty()) digits += ",";
        digits += std::to_string(d);
      }
      if (!digits.empty()) {
        out << "  " << states[s].name << " -> " << states[t].name << " [label=\"" << digits << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

BigNat base_change_element(const BigNat& n, std::uint32_t b) {
  check_b(b);
  DigitWord w = base_digits(n, b);
  w.base = 2 * b - 1;
  return (2 * b - 1) * word_value(w) + 1;
}

BigNat base_change_element(const BigNat& n, std::uint32_t b, const DigitWord& suffix) {
  check_b(b);
  DigitWord w = base_digits(n, b);
  for (auto d : suffix.digits) {
    if (d >= b) throw std::invalid_argument("base change suffix digit must be < b");
    w.digits.push_back(d);
  }
  w.base = 2 * b - 1;
  return word_value(w);
}

bool is_base_change_member(std::uint64_t x, std::uint32_t b) {
  check_b(b);
  const std::uint64_t q = 2 * b - 1;
  if (x % q != 1) return false;
  for (x /= q; x > 0; x /= q) {
    if (x % q >= b) return false;
  }
  return true;
}

Dfao membership_automaton(std::uint32_t b) {
  check_b(b);
  Dfao a;
  a.states = {{"q0", 0}, {"q1", 1}, {"q2", 0}};
  a.initial = 0;
  a.alphabet = 2 * b - 1;
  a.transitions.assign(3, std::vector<std::size_t>(a.alphabet, 2));
  for (std::uint32_t d = 0; d < b; ++d) {
    a.transitions[0][d] = d == 1 ? 1 : 0;
    a.transitions[1][d] = d == 1 ? 1 : 0;
  }
  return a;
}

int dfao_run(const Dfao& a, const DigitWord& w) {
  std::size_t s = a.initial;
  for (auto d : w.digits) {
    if (d >= a.alphabet) throw std::invalid_argument("dfao_run: digit outside alphabet");
    s = a.transitions[s][d];
  }
  return a.states[s].output;
}

std::vector<std::uint64_t> base_change_members(std::uint32_t b, std::uint64_t horizon) {
  return base_change_members(b, horizon, DigitWord{{1}, b});
}

std::vector<std::uint64_t> base_change_members(std::uint32_t b, std::uint64_t horizon, const DigitWord& suffix) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0;; ++n) {
    const BigNat x = base_change_element(n, b, suffix);
    if (x > horizon) break;
    if (x >= 1) out.push_back(to_u64(x));
  }
  return out;
}

Report verify_sumset_structure(std::uint32_t b, std::uint64_t horizon) {
  check_b(b);
  if (horizon < 2) throw std::invalid_argument("verify_sumset_structure: horizon must be >= 2");
  Report r;
  r.kind = "sumset";
  r.params["b"] = b;
  r.n = horizon;

  const Dfao a = membership_automaton(b);
  const std::uint32_t q = 2 * b - 1;
  std::vector<std::uint64_t> members;
  for (std::uint64_t x = 1; x <= horizon; ++x) {
    const int by_dfao = dfao_run(a, base_digits(x, q));
    const bool by_digits = is_base_change_member(x, b);
    if (by_dfao != static_cast<int>(by_digits)) r.fail(x, by_digits, by_dfao, "automaton vs digit inspection");
    if (by_dfao) members.push_back(x);
  }

  std::vector<bool> is_sum(horizon + 1, false);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i; j < members.size() && members[i] + members[j] <= horizon; ++j) {
      is_sum[members[i] + members[j]] = true;
    }
  }
  for (auto x : members) {
    if (is_sum[x]) r.fail(x, 0, 1, "member is a pairwise sum");
  }
  for (std::uint64_t x = 1; x <= horizon; ++x) {
    const bool expected = x >= 2 && (x - 2) % q == 0;
    if (is_sum[x] != expected) r.fail(x, expected, static_cast<int>(is_sum[x]), "sum set vs (2b-1)N+2");
  }
  std::sort(r.violations.begin(), r.violations.end(),
            [](const Violation& x, const Violation& y) { return x.index < y.index; });
  r.extra["members"] = members.size();
  return r;
}

Label base_change_label(std::uint64_t n, std::uint32_t b) {
  if (is_base_change_member(n, b)) return Label::one;
  if (n % (2 * b - 1) == 2) return Label::star;
  return Label::zero;
}

BaseChangeStream::BaseChangeStream(std::uint32_t b) : b_(b) { check_b(b); }

bool BaseChangeStream::pull() {
  for (;;) {
    const Label l = base_change_label(++n_, b_);
    if (l != Label::star) return l == Label::one;
  }
}

BitWord bitstream_from_base_change(std::uint32_t b, std::uint64_t count) {
  BaseChangeStream c(b);
  return take(c, count);
}

Report verify_index_relations(std::uint32_t b, std::uint64_t count) {
  check_b(b);
  Report r;
  r.kind = "index_relations";
  r.params["b"] = b;
  r.n = count;
  const std::uint64_t q = 2 * b - 1, p = 2 * b - 2;
  const BitWord c = bitstream_from_base_change(b, p * count);
  auto v = [&](std::uint64_t n) { return base_change_label(n, b); };
  auto as_label = [](std::uint8_t bit) { return bit ? Label::one : Label::zero; };
  for (std::uint64_t n = 0; n < count; ++n) {
    if (v(q * n + 1) != as_label(c[p * n])) {
      r.fail(p * n, static_cast<int>(v(q * n + 1)), c[p * n]);
    }
    for (std::uint64_t i = 1; i + 2 < q; ++i) {
      if (v(q * n + i + 2) != as_label(c[p * n + i])) {
        r.fail(p * n + i, static_cast<int>(v(q * n + i + 2)), c[p * n + i]);
      }
    }
  }
  return r;
}

}  // namespace sumfree
