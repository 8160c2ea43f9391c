#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dihedra/engine.hpp"

namespace py = pybind11;
using namespace dihedra;

namespace {

py::dict result_dict(const RunResult& r) {
    py::module_ json = py::module_::import("json");
    py::dict d = json.attr("loads")(r.report.dump());
    return d;
}

AlgebraDescription desc_from(const std::string& text) { return parse_description_text(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cohomology and deformation computations for involutive and cyclic "
              "A-infinity structures";

    m.def("validate", [](const std::string& doc) { return result_dict(run_validate(desc_from(doc))); },
          py::arg("doc"), "Run the applicable structure checks on a JSON algebra description.");

    m.def(
        "cohomology",
        [](const std::string& doc, const std::string& which, py::object max_weight,
           py::object degrees, py::object filtration, bool decompose) {
            CohomologyOptions opts;
            if (!max_weight.is_none()) opts.max_weight = max_weight.cast<std::size_t>();
            if (!degrees.is_none()) opts.degrees = degrees.cast<std::pair<int, int>>();
            if (!filtration.is_none()) opts.filtration = filtration.cast<long>();
            opts.decompose = decompose;
            return result_dict(run_cohomology(desc_from(doc), which, opts));
        },
        py::arg("doc"), py::arg("which"), py::arg("max_weight") = py::none(),
        py::arg("degrees") = py::none(), py::arg("filtration") = py::none(),
        py::arg("decompose") = false,
        "Per-degree dimension table for hh|hh+|hh-|hc|hd+|hd-|cycder.");

    m.def(
        "deform",
        [](const std::string& doc, const std::string& subcommand, py::object ring,
           const std::string& flavor) {
            DeformOptions opts;
            opts.subcommand = subcommand;
            if (!ring.is_none()) opts.ring = ring.cast<std::string>();
            opts.flavor = flavor;
            return result_dict(run_deform(desc_from(doc), opts));
        },
        py::arg("doc"), py::arg("subcommand"), py::arg("ring") = py::none(),
        py::arg("flavor") = "plain", "Maurer-Cartan check, gauge action, or moduli dimension.");

    m.def("iso_check",
          [](const std::string& doc) { return result_dict(run_isocheck(desc_from(doc))); },
          py::arg("doc"),
          "Compare cyclic cochains with cyclic derivations through the form-induced map.");

    m.attr("__version__") = "0.1.0";
}
