#include <homcount/dp.hpp>
#include <homcount/expr.hpp>
#include <homcount/io.hpp>
#include <homcount/oracle.hpp>
#include <homcount/partition.hpp>
#include <homcount/special.hpp>
#include <homcount/synthesis.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace homcount;

namespace
{
    auto to_python(const HomCount & value) -> py::object
    {
        return py::module_::import("builtins").attr("int")(to_decimal(value));
    }

    auto make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) -> Graph
    {
        return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    }

    auto labeled(const Graph & g, const std::vector<Label> & labels, int k) -> LabeledGraph
    {
        return LabeledGraph(g, k, labels);
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact graph homomorphism counting";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<InternalCheckFailed>(m, "InternalCheckFailed", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("edges", [](const Graph & g) { return std::vector<std::pair<Vertex, Vertex>>(g.edges().begin(), g.edges().end()); })
        .def("__eq__", [](const Graph & a, const Graph & b) { return a == b; })
        .def("__repr__", [](const Graph & g) { return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")"; });

    py::class_<ExtExpr>(m, "Expr")
        .def_static("from_json", [](const std::string & text) { return expr_from_json(Json::parse(text)); })
        .def("to_json", [](const ExtExpr & e) { return expr_to_json(e).dump(); })
        .def_property_readonly("k", &ExtExpr::k)
        .def("size", &expr_size)
        .def("evaluate", [](const ExtExpr & e) {
            auto g = eval_ext(e);
            return py::make_tuple(g.graph, g.labels);
        });

    m.def("clique", &gen_clique, py::arg("n"));
    m.def("cycle", &gen_cycle, py::arg("n"));
    m.def("path", &gen_path, py::arg("n"));
    m.def("hypercube", &gen_hypercube, py::arg("dimension"));
    m.def("kneser", &gen_kneser, py::arg("n"), py::arg("k"));
    m.def("subdivide_clique", [](int n, const Graph & u) { return subdivide_clique(n, u).graph; }, py::arg("n"), py::arg("u"));
    m.def("hypercube_expr", &hypercube_expr, py::arg("dimension"));

    m.def("brute_hom", [](const Graph & g, const Graph & h) { return to_python(brute_hom(g, h)); }, py::arg("g"), py::arg("h"));
    m.def("count_hom_via_expr", [](const Graph & g, const ExtExpr & e) { return to_python(count_hom_via_expr(g, e)); }, py::arg("g"), py::arg("expr"));
    m.def("count_colorings", [](const Graph & g, int n) { return to_python(count_colorings(g, n)); }, py::arg("g"), py::arg("n"));
    m.def("count_hom_kneser", [](const Graph & g, int n, int k) { return to_python(count_hom_kneser({g, n, k})); }, py::arg("g"), py::arg("n"),
        py::arg("k"));
    m.def("count_hom_subdivided", [](const Graph & g, int n, const Graph & u) { return to_python(count_hom_subdivided({g, n, u, {}})); },
        py::arg("g"), py::arg("n"), py::arg("u"));
    m.def(
        "par",
        [](int m, const std::vector<long long> & values, int n) {
            std::vector<HomCount> v(values.begin(), values.end());
            return to_python(par(SetFunction(m, std::move(v)), n));
        },
        py::arg("m"), py::arg("values"), py::arg("n"));

    m.def(
        "synthesize",
        [](const Graph & g, int k) -> py::object {
            auto result = synthesize(g, k);
            if (! result)
                return py::none();
            return py::make_tuple(result->expr, result->labels);
        },
        py::arg("g"), py::arg("k") = 2);
    m.def(
        "labeled_iso",
        [](const Graph & a, const std::vector<Label> & la, const Graph & b, const std::vector<Label> & lb, int k) {
            return labeled_iso(labeled(a, la, k), labeled(b, lb, k));
        },
        py::arg("a"), py::arg("labels_a"), py::arg("b"), py::arg("labels_b"), py::arg("k"));
    m.def(
        "gadget_reduce",
        [](const Graph & a, const std::vector<Label> & la, const Graph & b, const std::vector<Label> & lb, int k) {
            auto inst = gadget_reduce(labeled(a, la, k), labeled(b, lb, k));
            return py::make_tuple(inst.g_prime, inst.h_prime);
        },
        py::arg("a"), py::arg("labels_a"), py::arg("b"), py::arg("labels_b"), py::arg("k"));
    m.def("brute_iso", [](const Graph & a, const Graph & b) { return brute_iso(a, b); }, py::arg("a"), py::arg("b"));
}
