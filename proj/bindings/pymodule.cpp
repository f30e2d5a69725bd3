// Python bindings for the Gauss-diagram invariant library. The module mirrors
// the CLI surface: parse/serialize, invariant evaluation, diagram surgery,
// seeded generators, and the verification suites.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdcalc/corpus.hpp"
#include "gdcalc/diagram.hpp"
#include "gdcalc/invariants.hpp"
#include "gdcalc/moves.hpp"
#include "gdcalc/random_walk.hpp"
#include "gdcalc/skein.hpp"
#include "gdcalc/trace.hpp"
#include "gdcalc/verify.hpp"

namespace py = pybind11;

namespace {

gdcalc::Mode mode_from(const std::string& mode) {
    if (mode == "asc") return gdcalc::Mode::Asc;
    if (mode == "desc") return gdcalc::Mode::Desc;
    throw gdcalc::PreconditionError("mode must be 'asc' or 'desc', got '" + mode + "'");
}

py::object compute_py(const gdcalc::Diagram& d, const std::string& invariant,
                      std::optional<int> degree, const std::string& mode) {
    const gdcalc::Kind kind = gdcalc::kind_from_string(invariant, mode_from(mode));
    const gdcalc::ComputeOutcome out = gdcalc::compute_invariant(d, kind, degree);
    if (out.is_polynomial) return py::cast(out.poly);
    return py::cast(out.scalar);
}

py::dict report_to_dict(const gdcalc::SuiteReport& rep) {
    py::dict out;
    out["suite"] = rep.suite;
    out["passed"] = rep.passed;
    out["failed"] = rep.failed;
    if (rep.first) {
        py::dict ce;
        ce["index"] = rep.first->index;
        ce["context"] = rep.first->context;
        ce["detail"] = rep.first->detail;
        ce["diagram"] = rep.first->diagram;
        ce["trace"] = rep.first->trace;
        out["first"] = ce;
    } else {
        out["first"] = py::none();
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_gdcalc, m) {
    m.doc() = "Gauss-diagram state-sum invariants of classical and virtual links";

    py::register_exception<gdcalc::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<gdcalc::PreconditionError>(m, "PreconditionError",
                                                      PyExc_ValueError);

    py::class_<gdcalc::Diagram>(m, "Diagram")
        .def_readonly("name", &gdcalc::Diagram::name)
        .def_readonly("classical", &gdcalc::Diagram::classical)
        .def_property_readonly("circle_count", &gdcalc::Diagram::circle_count)
        .def_property_readonly("arrow_count", &gdcalc::Diagram::arrow_count)
        .def("__str__", [](const gdcalc::Diagram& d) { return gdcalc::serialize(d); })
        .def("__repr__", [](const gdcalc::Diagram& d) {
            return "<Diagram '" + (d.name.empty() ? std::string("?") : d.name) + "' " +
                   std::to_string(d.circle_count()) + " circles, " +
                   std::to_string(d.arrow_count()) + " arrows>";
        });

    m.def("parse", &gdcalc::parse, py::arg("text"),
          "Parse a Gauss diagram document into a Diagram");
    m.def("serialize", &gdcalc::serialize, py::arg("diagram"),
          "Render a Diagram back to its canonical document form");

    m.def(
        "conway",
        [](const gdcalc::Diagram& d, const std::string& mode) {
            return gdcalc::conway(d, mode_from(mode));
        },
        py::arg("diagram"), py::arg("mode") = "asc",
        "State-sum polynomial as a degree -> coefficient dict");
    m.def("conway_skein", &gdcalc::conway_skein, py::arg("diagram"),
          "Oracle polynomial from crossing-switch recursion (classical only)");
    m.def("nabla_ad", &gdcalc::nabla_ad, py::arg("diagram"),
          "Difference of the ascending and descending polynomials");
    m.def("compute", &compute_py, py::arg("diagram"), py::arg("invariant"),
          py::arg("degree") = py::none(), py::arg("mode") = "asc",
          "Evaluate an invariant by name; returns a dict or an int");

    m.def("mirror", &gdcalc::mirror, py::arg("diagram"));
    m.def("move_base_point", &gdcalc::move_base_point, py::arg("diagram"),
          py::arg("circle"), py::arg("gap"));
    m.def("virtualize", &gdcalc::virtualize, py::arg("diagram"), py::arg("arrow"));
    m.def("connected_sum", &gdcalc::connected_sum, py::arg("first"), py::arg("second"));
    m.def("disjoint_union", &gdcalc::disjoint_union, py::arg("first"), py::arg("second"));
    m.def("is_planar", &gdcalc::is_planar, py::arg("diagram"),
          "Whether the diagram is realizable in the plane");

    m.def("random_diagram", &gdcalc::random_diagram, py::arg("seed"), py::arg("circles"),
          py::arg("arrows"), "Seeded virtual diagram with the given shape");
    m.def(
        "random_classical",
        [](std::uint64_t seed, const gdcalc::Diagram& base, int moves, int max_arrows) {
            const gdcalc::WalkResult walk =
                gdcalc::random_classical(seed, base, moves, max_arrows);
            std::vector<std::string> trace;
            trace.reserve(walk.trace.size());
            for (const gdcalc::MoveSite& s : walk.trace)
                trace.push_back(gdcalc::encode_site(s));
            return py::make_tuple(walk.diagram, trace);
        },
        py::arg("seed"), py::arg("base"), py::arg("moves"), py::arg("max_arrows") = 12,
        "Seeded realizability-preserving walk; returns (diagram, encoded moves)");
    m.def(
        "list_moves",
        [](const gdcalc::Diagram& d) {
            std::vector<std::string> out;
            for (const gdcalc::MoveSite& s : gdcalc::list_moves(d))
                out.push_back(gdcalc::encode_site(s));
            return out;
        },
        py::arg("diagram"), "Every applicable move site, one encoded line each");

    m.def(
        "verify_suite",
        [](const std::string& suite, std::uint64_t seed, int trials, int max_arrows,
           bool inject_fault) {
            gdcalc::VerifyOptions opt;
            opt.seed = seed;
            opt.trials = trials;
            opt.max_arrows = max_arrows;
            opt.inject_fault = inject_fault;
            return report_to_dict(gdcalc::run_suite(suite, opt));
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 100,
        py::arg("max_arrows") = 12, py::arg("inject_fault") = false,
        "Run one verification suite and summarize it as a dict");
    m.def("suite_names", [] { return gdcalc::suite_names(); });

    m.def("corpus_names", [] {
        std::vector<std::string> names;
        for (const gdcalc::CorpusEntry& e : gdcalc::corpus()) names.push_back(e.name);
        return names;
    });
    m.def("corpus_diagram", &gdcalc::corpus_diagram, py::arg("name"));
    m.def(
        "corpus_text",
        [](const std::string& name) { return gdcalc::corpus_entry(name).text; },
        py::arg("name"));
}
