#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kabminor/extremal.hpp"
#include "kabminor/family_spec.hpp"
#include "kabminor/graph6.hpp"
#include "kabminor/json_io.hpp"
#include "kabminor/minors.hpp"
#include "kabminor/spectral.hpp"
#include "kabminor/verify.hpp"

namespace py = pybind11;
using namespace kabminor;

// Structured results cross the boundary as JSON text; the Python wrapper decodes them.
PYBIND11_MODULE(_kabminor, m) {
    m.attr("__version__") = KABMINOR_VERSION;

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("n") = 0)
        .def_static("from_edges",
                    [](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); })
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_static("from_spec", [](const std::string& s) { return parse_family(s); })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("degree_sequence", &Graph::degree_sequence)
        .def("is_connected", &Graph::is_connected)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "<Graph " + to_graph6(g) + ">"; });

    m.def("spectral_radius_json", [](const Graph& g, double alpha) {
        return to_json(spectral_radius(g, AlphaParam(alpha))).dump();
    });
    m.def("has_minor_json", [](const Graph& g, const Graph& h, std::uint64_t budget) {
        return to_json(has_minor(g, h, budget)).dump();
    }, py::arg("g"), py::arg("h"), py::arg("budget") = kDefaultMinorBudget);
    m.def("ab_property_json", [](const Graph& g, std::size_t a, std::size_t b, std::uint64_t budget) {
        return to_json(ab_property(g, a, b, budget)).dump();
    }, py::arg("g"), py::arg("a"), py::arg("b"), py::arg("budget") = kDefaultMinorBudget);
    m.def("star_minor_free", &star_minor_free);
    m.def("predict_json", [](std::size_t a, std::size_t b, std::size_t n, double alpha) {
        return to_json(predict(a, b, n, AlphaParam(alpha))).dump();
    });
    m.def("search_json", [](std::size_t n, const std::string& constraint, std::vector<double> alphas, std::size_t jobs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : search_max(enumerator_corpus(n, true), Constraint::parse(constraint), alphas, {jobs, kDefaultMinorBudget})) {
            arr.push_back(r.to_json());
        }
        return arr.dump();
    }, py::arg("n"), py::arg("constraint"), py::arg("alphas"), py::arg("jobs") = 1);
    m.def("check_names", &suite_names);
    m.def("run_check_json", [](const std::string& name, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.seed = seed;
        return run_check(name, cfg).to_json().dump();
    }, py::arg("name"), py::arg("seed") = VerifyConfig{}.seed);
}
