#include <optional>
#include <string>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "holochern/cli.hpp"
#include "holochern/parser.hpp"
#include "holochern/selftest.hpp"

namespace py = pybind11;
using namespace holochern;

namespace {

// Returns {"report": <json report>, "artifact": <cochain text>} as JSON text.
std::string run_json(const std::string& manifest, const std::string& mode, std::optional<int> max_level,
                     std::uint64_t seed) {
  RunOptions opts;
  opts.mode = mode;
  opts.max_level = max_level;
  opts.seed = seed;
  RunResult r;
  if (manifest.empty()) {
    r = run(opts, Manifest{});
  } else {
    try {
      r = run(opts, parse_manifest(nlohmann::json::parse(manifest)));
    } catch (const nlohmann::json::exception& e) {
      r.mode = mode;
      r.exit_code = 2;
      r.error = std::string("manifest structure: ") + e.what();
    } catch (const ParseError& e) {
      r.mode = mode;
      r.exit_code = 2;
      r.error = std::string("parse error: ") + e.what();
    } catch (const std::exception& e) {
      r.mode = mode;
      r.exit_code = 2;
      r.error = e.what();
    }
  }
  nlohmann::ordered_json out;
  out["report"] = json_report(r);
  out["artifact"] = r.artifact;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_holochern, m) {
  m.doc() = "Exact Cech-Hodge Chern character cocycles from transition data";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<RationalFunction>(m, "RationalFunction")
      .def(py::init([](const std::string& text, const std::vector<std::string>& vars) {
             return parse_expr(text, vars);
           }),
           py::arg("text"), py::arg("variables"))
      .def(py::init<long>())
      .def("__str__", &RationalFunction::to_string)
      .def("__repr__", [](const RationalFunction& f) { return "RationalFunction('" + f.to_string() + "')"; })
      .def("derivative", &RationalFunction::derivative)
      .def("inverse", &RationalFunction::inverse)
      .def("is_zero", &RationalFunction::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(-py::self);

  m.def("run_json", &run_json, py::arg("manifest"), py::arg("mode"), py::arg("max_level") = py::none(),
        py::arg("seed") = 1);
  m.def(
      "residue",
      [](const std::string& form, const std::vector<std::string>& coords) -> std::optional<std::string> {
        auto r = residue_at_zero(parse_form(form, make_chart("chart", coords)));
        if (!r) return std::nullopt;
        return r->to_string();
      },
      py::arg("form"), py::arg("coords"));
  m.def("modes", &run_modes);
}
