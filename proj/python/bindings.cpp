#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewcat/skewcat.hpp"

namespace py = pybind11;
using namespace skew;

namespace {

Flags flags(bool ln, bool rn, bool an) { return {ln, rn, an}; }

#define SKEW_FLAG_ARGS py::kw_only(), py::arg("ln") = false, py::arg("rn") = false, \
                       py::arg("an") = false

}  // namespace

PYBIND11_MODULE(_skewcat, m) {
  m.doc() = "Proof search and coherence for skew monoidal categories";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  auto type = py::register_exception<TypeError>(m, "SkewTypeError", base.ptr());
  py::register_exception<FlagError>(m, "FlagError", type.ptr());

  m.def("normalize_formula", [](const std::string& s) { return print_formula(parse_formula(s)); },
        py::arg("text"), "Parse a formula and print it canonically.");
  m.def("normalize_sequent", [](const std::string& s) { return print_sequent(parse_sequent(s)); },
        py::arg("text"));

  m.def(
      "count",
      [](const std::string& seq, bool ln, bool rn, bool an, unsigned threads) {
        SearchOptions o;
        o.threads = threads;
        py::gil_scoped_release nogil;
        return count_derivations(flags(ln, rn, an), parse_sequent(seq), o);
      },
      py::arg("sequent"), SKEW_FLAG_ARGS, py::arg("threads") = 1,
      "Number of focused derivations of a sequent.");

  m.def(
      "search",
      [](const std::string& seq, bool ln, bool rn, bool an, unsigned threads) {
        SearchOptions o;
        o.threads = threads;
        std::vector<std::string> out;
        py::gil_scoped_release nogil;
        for (const auto& d : search(flags(ln, rn, an), root_sequent(parse_sequent(seq)), o))
          out.push_back(to_sexpr(d));
        return out;
      },
      py::arg("sequent"), SKEW_FLAG_ARGS, py::arg("threads") = 1,
      "Every focused derivation of a sequent, as s-expressions.");

  m.def(
      "check",
      [](const std::string& d, bool ln, bool rn, bool an) {
        return print_sequent(check_seq(parse_seq_deriv(d), flags(ln, rn, an)));
      },
      py::arg("derivation"), SKEW_FLAG_ARGS, "Conclusion of a sequent-calculus derivation.");

  m.def(
      "focus",
      [](const std::string& d, bool ln, bool rn, bool an) {
        return to_sexpr(focus(parse_seq_deriv(d), flags(ln, rn, an)));
      },
      py::arg("derivation"), SKEW_FLAG_ARGS);
  m.def(
      "emb",
      [](const std::string& d, bool ln, bool rn, bool an) {
        return to_sexpr(emb(parse_foc_deriv(d), flags(ln, rn, an)));
      },
      py::arg("derivation"), SKEW_FLAG_ARGS);
  m.def(
      "rewrite_nf",
      [](const std::string& d, bool ln, bool rn, bool an) {
        return to_sexpr(rewrite_nf(parse_seq_deriv(d), flags(ln, rn, an)));
      },
      py::arg("derivation"), SKEW_FLAG_ARGS);
  m.def(
      "seq_equal",
      [](const std::string& f, const std::string& g, bool ln, bool rn, bool an) {
        return seq_equal(parse_seq_deriv(f), parse_seq_deriv(g), flags(ln, rn, an));
      },
      py::arg("f"), py::arg("g"), SKEW_FLAG_ARGS);

  m.def(
      "cat_equal",
      [](const std::string& f, const std::string& g, bool ln, bool rn, bool an) {
        return cat_equal(parse_cat_deriv(f), parse_cat_deriv(g), flags(ln, rn, an));
      },
      py::arg("f"), py::arg("g"), SKEW_FLAG_ARGS);
  m.def(
      "sound",
      [](const std::string& d, bool ln, bool rn, bool an) {
        return to_sexpr(sound(parse_seq_deriv(d), flags(ln, rn, an)));
      },
      py::arg("derivation"), SKEW_FLAG_ARGS);
  m.def(
      "cmplt",
      [](const std::string& f, bool ln, bool rn, bool an) {
        return to_sexpr(cmplt(parse_cat_deriv(f), flags(ln, rn, an)));
      },
      py::arg("map"), SKEW_FLAG_ARGS);
  m.def(
      "hom",
      [](const std::string& a, const std::string& c, bool ln, bool rn, bool an) {
        std::vector<std::string> out;
        for (const auto& f : hom_enumerate(flags(ln, rn, an), parse_formula(a), parse_formula(c)))
          out.push_back(to_sexpr(f));
        return out;
      },
      py::arg("source"), py::arg("target"), SKEW_FLAG_ARGS,
      "One map per equality class of maps source ==> target.");
}
