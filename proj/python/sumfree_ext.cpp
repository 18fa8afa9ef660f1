#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumfree/base_change.hpp"
#include "sumfree/bijection.hpp"
#include "sumfree/closed_form.hpp"
#include "sumfree/regularity.hpp"
#include "sumfree/suites.hpp"

namespace py = pybind11;
using namespace sumfree;

namespace {

py::int_ to_py(const BigInt& v) { return py::int_(py::module_::import("builtins").attr("int")(v.str())); }

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

SubstitutionParams params_from(const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>& t) {
  SubstitutionParams p{std::get<0>(t), std::get<1>(t), std::get<2>(t)};
  p.validate();
  return p;
}

py::dict prefix_dict(const SumFreePrefix& s) {
  py::dict d;
  d["elements"] = s.elements;
  d["mu"] = s.mu;
  d["alpha"] = s.alpha;
  d["horizon"] = s.horizon;
  d["consumed"] = s.consumed;
  return d;
}

py::object report_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_sumfree, m) {
  m.doc() = "Sum-free sets from zero-one sequences";

  py::register_exception<StreamExhausted>(m, "StreamExhausted");
  py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_ValueError);

  m.def("base_digits", [](const py::int_& n, std::uint32_t b, std::size_t min_len) {
    return base_digits(from_py(n), b, min_len).digits;
  }, py::arg("n"), py::arg("b"), py::arg("min_len") = 0);
  m.def("word_value", [](const std::vector<std::uint32_t>& digits, std::uint32_t b) {
    for (auto d : digits) {
      if (d >= b) throw py::value_error("digit out of range");
    }
    return to_py(word_value(DigitWord{digits, b}));
  });
  m.def("m_complement", [](const py::int_& n, std::uint32_t mm) { return to_py(m_complement(from_py(n), mm)); });
  m.def("thue_morse", &thue_morse, "Thue-Morse with t_0 = 1");

  m.def("decode", [](const std::string& source, std::uint64_t horizon, const std::string& tail) {
    const auto rule = parse_tail_rule(tail);
    if (!rule) throw py::value_error("unknown tail rule");
    auto c = make_stream(source, *rule);
    const DecodeResult r = decode(*c, horizon);
    py::dict d = prefix_dict(r.set);
    d["labels"] = r.labeled.to_string();
    return d;
  }, py::arg("source"), py::arg("horizon"), py::arg("tail") = "none");
  m.def("decode_elements", [](const std::string& source, std::uint64_t horizon, std::size_t count) {
    auto c = make_stream(source);
    DecodeLimits limits{horizon};
    if (count) limits.max_elements = count;
    return prefix_dict(decode_elements(*c, limits));
  }, py::arg("source"), py::arg("horizon") = std::uint64_t{1} << 40, py::arg("count") = 0);
  m.def("encode", [](const std::vector<std::uint64_t>& elements, std::uint64_t horizon) {
    if (elements.empty()) throw py::value_error("empty set");
    return to_string(encode(elements, horizon ? horizon : elements.back()));
  }, py::arg("elements"), py::arg("horizon") = 0);
  m.def("take", [](const std::string& source, std::uint64_t count) {
    auto c = make_stream(source);
    return to_string(take(*c, count));
  });

  m.def("mu_closed_form", [](std::uint64_t n, const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>& p) {
    return to_py(mu_closed_form(n, params_from(p)));
  });
  m.def("scan_mu", [](const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>& p, std::size_t count) {
    return scan_mu(params_from(p), count);
  });
  m.def("is_admissible", [](const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>& p) {
    return is_admissible(params_from(p));
  });
  m.def("check_growth_condition", [](const std::vector<std::uint64_t>& mu, unsigned big_m) {
    return check_growth_condition(mu, big_m).holds;
  });
  m.def("h_cantor_closed", [](unsigned n, const std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>& p) {
    return to_py(h_cantor_closed(n, params_from(p)));
  });
  m.def("alpha_closed", [](std::uint64_t n) { return to_py(alpha_closed(n)); });
  m.def("s_closed", [](std::uint64_t n, const py::list& h) {
    std::vector<BigNat> w;
    for (auto x : h) w.push_back(from_py(x));
    return to_py(s_closed(n, NumerationSystem(std::move(w))));
  });
  m.def("s_fast_growth", [](const std::vector<std::uint64_t>& mu, std::uint64_t n) {
    return to_py(s_fast_growth(mu, n));
  });

  m.def("rational_rank", [](const py::list& rows) {
    std::vector<std::vector<BigInt>> v;
    for (auto row : rows) {
      std::vector<BigInt> r;
      for (auto x : row) r.push_back(from_py(x));
      v.push_back(std::move(r));
    }
    return rational_rank(v);
  });
  m.def("regularity_profile", [](const py::list& seq, unsigned k, unsigned depth, std::size_t window) {
    std::vector<BigInt> s;
    for (auto x : seq) s.push_back(from_py(x));
    return regularity_profile(s, k, depth, window);
  });

  m.def("base_change_element", [](const py::int_& n, std::uint32_t b) { return to_py(base_change_element(from_py(n), b)); });
  m.def("is_base_change_member", &is_base_change_member);
  m.def("automaton_accepts", [](std::uint32_t b, const py::int_& n) {
    return dfao_run(membership_automaton(b), base_digits(from_py(n), 2 * b - 1)) == 1;
  });
  m.def("automaton", [](std::uint32_t b, const std::string& format) {
    const Dfao a = membership_automaton(b);
    return format == "dot" ? a.to_dot() : a.to_table();
  }, py::arg("b"), py::arg("format") = "table");
  m.def("bitstream_from_base_change", [](std::uint32_t b, std::uint64_t count) {
    return to_string(bitstream_from_base_change(b, count));
  });

  m.def("suite_names", &suite_names);
  m.def("verify", [](const std::string& suite, const std::string& subst, std::uint32_t b, std::uint64_t horizon,
                     std::uint64_t count, unsigned mm, unsigned depth, std::size_t window, const std::string& source) {
    SuiteOptions o;
    if (!subst.empty()) o.subst = parse_substitution(subst);
    o.b = b;
    o.horizon = horizon;
    o.count = count;
    o.m = mm;
    o.depth = depth;
    o.window = window;
    if (!source.empty()) o.source = source;
    if (suite == "all") return report_to_py(merge_reports(run_all_suites(o)));
    return report_to_py(to_json(run_suite(suite, o)));
  }, py::arg("suite"), py::arg("subst") = "", py::arg("b") = 2, py::arg("horizon") = 0, py::arg("count") = 0,
     py::arg("m") = 0, py::arg("depth") = 0, py::arg("window") = 0, py::arg("source") = "");
}
