#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbicalc/cli.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/germs.hpp"
#include "orbicalc/moduli.hpp"

namespace py = pybind11;
using namespace orbicalc;

namespace {

std::string z(const exactmath::Integer& v) { return v.get_str(); }

cli::RunOptions options(std::optional<unsigned> truncation, bool trace) { return {truncation, trace}; }

}  // namespace

PYBIND11_MODULE(_orbicalc, m) {
  m.doc() = "Exact invariants of 4-orbifolds with isolated cyclic singularities";

  static py::exception<Error> base(m, "Error");
  static py::exception<ValidationError> validation(m, "ValidationError", base.ptr());
  static py::exception<ComputationError> computation(m, "ComputationError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ValidationError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(validation.ptr())(e.what());
      exc.attr("kind") = e.kind();
      exc.attr("field") = e.field();
      PyErr_SetObject(validation.ptr(), exc.ptr());
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(computation.ptr())(e.what());
      exc.attr("kind") = e.kind();
      PyErr_SetObject(computation.ptr(), exc.ptr());
    }
  });

  // Requests and reports cross the boundary as JSON text; the package
  // wrapper converts them to Python objects.
  m.def(
      "run",
      [](const std::string& request, std::optional<unsigned> truncation, bool trace) {
        cli::Json doc;
        try {
          doc = cli::Json::parse(request);
        } catch (const cli::Json::parse_error& e) {
          throw ValidationError(std::string("request is not valid JSON: ") + e.what());
        }
        const auto report = cli::run(doc, options(truncation, trace));
        return py::make_tuple(report.status, report.json.dump());
      },
      py::arg("request"), py::arg("truncation") = std::nullopt, py::arg("trace") = false);
  m.def(
      "batch",
      [](const std::string& text, std::optional<unsigned> truncation, bool trace) {
        const auto report = cli::batch(text, options(truncation, trace));
        return py::make_tuple(report.status, report.json.dump());
      },
      py::arg("text"), py::arg("truncation") = std::nullopt, py::arg("trace") = false);
  m.def("command_names", &cli::command_names);

  m.def(
      "local_intersection",
      [](const std::string& g1, const std::string& g2, std::optional<unsigned> truncation) {
        germs::IntersectionOptions opts;
        opts.truncation = truncation;
        return z(germs::local_intersection(germs::BranchGerm::parse(g1), germs::BranchGerm::parse(g2), opts));
      },
      py::arg("g1"), py::arg("g2"), py::arg("truncation") = std::nullopt);
  m.def("self_intersection", [](const std::string& g) {
    const auto s = germs::self_intersection(germs::BranchGerm::parse(g));
    return py::make_tuple(z(s.value), s.exact);
  });
  m.def("self_intersection_monomial", [](unsigned l1, unsigned l2) { return z(germs::self_intersection_monomial(l1, l2)); });
  m.def("delta", [](unsigned mod, long b, long c) { return z(moduli::delta_solve(mod, b, c)); });
  m.def("character_sum", [](unsigned mod, unsigned a, unsigned b, unsigned c) {
    return moduli::I_contribution(mod, a, b, c).str();
  });
  m.def("fixed_point_weight_pairs", &moduli::fixed_point_weight_pairs);
}
