#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hilbert/cli.hpp"
#include "hilbert/error.hpp"
#include "hilbert/growth.hpp"
#include "hilbert/invariants.hpp"
#include "hilbert/magma.hpp"
#include "hilbert/paper_suite.hpp"
#include "hilbert/series.hpp"

namespace py = pybind11;
using namespace hilbert;

namespace {

std::vector<std::string> coeff_strings(const Series& s) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(to_string(s[n]));
  return out;
}

UniPoly poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> c;
  for (const auto& x : coeffs) c.push_back(parse_rat(x));
  return UniPoly(std::move(c));
}

py::dict averaged(const invariants::AveragedSeries& a) {
  py::dict d;
  d["num"] = a.rational.num().to_string();
  d["den"] = a.rational.den().to_string();
  d["coeffs"] = coeff_strings(a.series);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hilbert series toolkit";

  static py::exception<Error> hilbert_error(m, "HilbertError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = hilbert_error;
      py::object instance = err(e.what());
      instance.attr("code") = std::string(errc_name(e.code()));
      PyErr_SetObject(err.ptr(), instance.ptr());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::run(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Run a CLI command; returns (exit_code, stdout, stderr).");

  m.def("catalan", [](std::size_t order) { return coeff_strings(catalan(order)); }, py::arg("order"));
  m.def(
      "named_series", [](const std::string& kind, std::size_t order) { return coeff_strings(named_series(parse_named_series(kind), order)); },
      py::arg("kind"), py::arg("order"));
  m.def(
      "magma_series",
      [](const std::map<std::size_t, long>& arities, std::size_t order) {
        std::map<std::size_t, Int> counts;
        for (const auto& [n, c] : arities) counts[n] = c;
        return coeff_strings(
            magma::magma_series(magma::OmegaSignature::from_arities(std::move(counts)), magma::GeneratorWeights::single(order), order));
      },
      py::arg("arities"), py::arg("order"));
  m.def(
      "gk_from_rational",
      [](const std::vector<std::string>& num, const std::vector<std::string>& den) {
        return growth::gk_from_rational(poly_from_strings(num), poly_from_strings(den));
      },
      py::arg("num"), py::arg("den"));
  m.def(
      "molien", [](const std::string& group, std::size_t order) { return averaged(invariants::molien_commutative(invariants::named_group(group), order)); },
      py::arg("group"), py::arg("order"));
  m.def(
      "dicks_formanek", [](const std::string& group, std::size_t order) { return averaged(invariants::dicks_formanek(invariants::named_group(group), order)); },
      py::arg("group"), py::arg("order"));
  m.def("paper_suite", [] {
    std::vector<py::dict> rows;
    for (const auto& row : paper::run_suite(paper::embedded_golden(), std::nullopt)) {
      py::dict d;
      d["id"] = row.id;
      d["title"] = row.title;
      d["status"] = std::string(paper::to_string(row.status));
      d["detail"] = row.detail;
      rows.push_back(d);
    }
    return rows;
  });
}
