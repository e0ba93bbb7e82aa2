#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beauville/beauville.hpp"
#include "beauville/certificate.hpp"
#include "beauville/coset_enum.hpp"
#include "beauville/errors.hpp"
#include "beauville/lemmas.hpp"
#include "beauville/maximal_class.hpp"
#include "beauville/nottingham.hpp"
#include "beauville/pipeline.hpp"
#include "beauville/presentation.hpp"

namespace py = pybind11;
using namespace beauville;

namespace {

EnumerationLimits limits(std::size_t max_cosets) {
  EnumerationLimits l = default_limits();
  if (max_cosets) l.max_cosets = max_cosets;
  return l;
}

py::dict lemma_dict(const LemmaReport& r) {
  py::dict d;
  d["cases"] = r.cases;
  d["counterexamples"] = r.counterexamples;
  d["ok"] = r.ok();
  return d;
}

}  // namespace

PYBIND11_MODULE(_beauville, m) {
  m.doc() = "Beauville structures on finite p-groups";
  m.attr("__version__") = kVersion;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<StateError>(m, "StateError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<LimitExceeded>(m, "LimitExceeded", base.ptr());

  m.def(
      "verify_json",
      [](std::uint32_t p, std::uint32_t k, std::size_t max_cosets) {
        Certificate c;
        {
          py::gil_scoped_release release;
          c = verify_main_theorem(p, k, limits(max_cosets));
        }
        return to_json(c);
      },
      py::arg("p"), py::arg("k"), py::arg("max_cosets") = 0);

  m.def(
      "recheck_json",
      [](const std::string& text, std::size_t max_cosets) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& r : recheck_certificate(certificate_from_json(text), limits(max_cosets))) {
          out.emplace_back(r.name, r.pass, r.detail);
        }
        return out;
      },
      py::arg("text"), py::arg("max_cosets") = 0);

  m.def("normalize_presentation", [](const std::string& text) { return format_presentation(parse_presentation(text)); });

  m.def(
      "gamma_quotient_presentation",
      [](std::uint32_t p, std::uint32_t c) { return format_presentation(gamma_quotient_presentation(p, c)); },
      py::arg("p"), py::arg("c"));

  m.def(
      "enumerate_order",
      [](const std::string& text, std::size_t max_cosets) {
        const Presentation pres = parse_presentation(text);
        py::gil_scoped_release release;
        return enumerate(pres, limits(max_cosets)).n_cosets();
      },
      py::arg("text"), py::arg("max_cosets") = 0);

  m.def(
      "abelian_search",
      [](std::uint32_t n) -> py::object {
        const auto r = abelian_beauville_search(n);
        if (!r) return py::none();
        py::dict d;
        d["pair1"] = py::make_tuple(r->coordinates[0], r->coordinates[1]);
        d["pair2"] = py::make_tuple(r->coordinates[2], r->coordinates[3]);
        d["strongly_real"] = r->strongly_real;
        return std::move(d);
      },
      py::arg("n"));

  m.def(
      "nottingham_lcs",
      [](std::uint32_t p, std::size_t precision) {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, bool>> out;
        for (const auto& r : check_lcs_formula(p, precision)) {
          out.emplace_back(r.j, r.expected_index, r.observed_index, r.matches);
        }
        return out;
      },
      py::arg("p"), py::arg("precision"));

  m.def(
      "nottingham_order",
      [](std::uint32_t p, std::size_t m) { return nottingham_quotient(p, m).group.order(); }, py::arg("p"),
      py::arg("precision"));

  m.def(
      "maximal_class_layers",
      [](std::uint32_t p, std::uint32_t i) {
        const auto P = construct_P(p, i);
        const LayerReport r = verify_layer_orders(P);
        py::dict d;
        d["order"] = P.group().order();
        d["ok"] = r.ok;
        d["uniserial"] = r.uniserial;
        d["outside_p1"] = r.outside_p1;
        d["outside_p1_order_p"] = r.outside_p1_order_p;
        std::vector<std::tuple<std::uint32_t, std::size_t, std::uint64_t, std::uint64_t>> rows;
        for (const auto& row : r.rows) rows.emplace_back(row.j, row.size, row.expected_order, row.exponent);
        d["rows"] = rows;
        return d;
      },
      py::arg("p"), py::arg("i"));

  m.def(
      "intersection_lemmas",
      [](std::uint32_t p, std::uint32_t k) {
        const std::uint32_t i = k * (p - 1) + 1;
        const FiniteGroup H = group_from_presentation(gamma_quotient_presentation(p, i), default_limits());
        py::dict d;
        d["intersection1"] = lemma_dict(check_intersection1(H));
        d["intersection2"] = lemma_dict(check_intersection2(H));
        return d;
      },
      py::arg("p"), py::arg("k"));
}
