#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosmotope/canonical_form.hpp"
#include "cosmotope/cli.hpp"
#include "cosmotope/facet_rules.hpp"

namespace py = pybind11;
using namespace cosmo;

namespace {

// Owns the graph and its generator table together so the table's reference
// stays valid for the lifetime of the python object.
struct Session {
    Graph graph;
    GeneratorTable table;
    explicit Session(Graph g) : graph(std::move(g)), table(graph) {}

    TermOrder order(const std::string& spec) const {
        if (spec == "path") return specialized_order(table, OrderKind::Path);
        if (spec == "cycle") return specialized_order(table, OrderKind::Cycle);
        if (spec.rfind("tree:", 0) == 0)
            return specialized_order(table, OrderKind::Tree, std::stoi(spec.substr(5)));
        if (spec == "generic" || spec.empty())
            return generic_good_order(table, default_generic_sequence(table));
        if (spec == "auto") {
            if (graph.is_canonical_path()) return specialized_order(table, OrderKind::Path);
            if (graph.is_canonical_cycle()) return specialized_order(table, OrderKind::Cycle);
            if (graph.is_tree()) {
                for (int v = 1; v <= graph.vertex_count(); ++v)
                    if (graph.is_leaf(v))
                        return specialized_order(table, OrderKind::Tree, v);
            }
            return generic_good_order(table, default_generic_sequence(table));
        }
        throw ValidationError("unknown order spec '" + spec + "'");
    }

    std::vector<std::vector<std::string>> names_of(const std::vector<GenSet>& sets) const {
        std::vector<std::vector<std::string>> out;
        for (const GenSet& s : sets) {
            std::vector<std::string> row;
            for (int id : s) row.push_back(table.name(id));
            out.push_back(std::move(row));
        }
        return out;
    }
};

}  // namespace

PYBIND11_MODULE(_cosmotope, m) {
    m.doc() = "exact computations on cosmological polytopes of graphs";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

    py::class_<Session>(m, "Polytope")
        .def(py::init([](int vertices, const std::vector<std::pair<int, int>>& edges) {
                 return new Session(build_graph(vertices, edges));
             }),
             py::arg("vertices"), py::arg("edges"))
        .def_static("path", [](int n) { return new Session(path_graph(n)); })
        .def_static("cycle", [](int n) { return new Session(cycle_graph(n)); })
        .def_static("star", [](int n) { return new Session(star_graph(n)); })
        .def_property_readonly("dimension", [](const Session& s) { return dimension(s.graph); })
        .def_property_readonly("generator_count", [](const Session& s) { return s.table.count(); })
        .def("generator_names",
             [](const Session& s) {
                 std::vector<std::string> names;
                 for (int id = 0; id < s.table.count(); ++id) names.push_back(s.table.name(id));
                 return names;
             })
        .def("facets",
             [](const Session& s, const std::string& order) {
                 return s.names_of(enumerate_facets(s.table, s.order(order)).facets);
             },
             py::arg("order") = "auto")
        .def("nonfaces",
             [](const Session& s, const std::string& order) {
                 return s.names_of(minimal_nonfaces(generate_basis(s.table), s.order(order)));
             },
             py::arg("order") = "auto")
        .def("volume",
             [](const Session& s, const std::string& order) {
                 return normalized_volume(enumerate_facets(s.table, s.order(order))).to_string();
             },
             py::arg("order") = "auto")
        .def("brute_volume", [](const Session& s) { return brute_volume(s.table).to_string(); })
        .def("hstar",
             [](const Session& s) {
                 std::vector<std::string> out;
                 for (const auto& c : hstar_ehrhart(s.table).coefficients)
                     out.push_back(c.to_string());
                 return out;
             })
        .def("gb_verify",
             [](const Session& s, const std::string& order) {
                 return verify_groebner(generate_basis(s.table), s.order(order), s.table).pass;
             },
             py::arg("order") = "auto")
        .def("canonical_eval",
             [](const Session& s, int count, uint64_t seed, const std::string& order) {
                 Triangulation t = enumerate_facets(s.table, s.order(order));
                 PolytopeForm form(t, s.table);
                 std::vector<std::string> out;
                 for (const QVec& p : sample_points(s.table, count, seed))
                     out.push_back(form.value(p).to_fraction_string());
                 return out;
             },
             py::arg("count") = 5, py::arg("seed") = 1, py::arg("order") = "auto");

    m.def("closed_path_volume",
          [](int n) { return closed_volume(VolumeKind::Path, n).to_string(); });
    m.def("closed_cycle_volume",
          [](int n) { return closed_volume(VolumeKind::Cycle, n).to_string(); });
}
