#include "ldcode/assoc.hpp"
#include "ldcode/cactus.hpp"
#include "ldcode/enumerate.hpp"
#include "ldcode/extremal.hpp"
#include "ldcode/families.hpp"
#include "ldcode/graph6.hpp"
#include "ldcode/ld.hpp"
#include "ldcode/report.hpp"
#include "ldcode/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ldcode;

namespace {

std::vector<Vertex> as_list(VertexSet s)
{
    return s.to_vector();
}

VertexSet as_set(const std::vector<Vertex>& vertices, const Graph& g)
{
    VertexSet s;
    for (Vertex v : vertices) {
        if (v < 0 || v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
        s.insert(v);
    }
    return s;
}

FamilyKind kind_of(const std::string& name)
{
    const auto kind = parse_family_kind(name);
    if (!kind)
        throw GraphError("unknown family '" + name + "'");
    return *kind;
}

Invariant invariant_of(const std::string& name)
{
    if (name == "lambda")
        return Invariant::lambda;
    if (name == "lambda_complement")
        return Invariant::lambda_complement;
    if (name == "lambda_global")
        return Invariant::lambda_global;
    throw GraphError("unknown invariant '" + name + "' (lambda, lambda_complement, lambda_global)");
}

FamilySpec spec_of(const std::string& kind, int n, int r, int s)
{
    const FamilyKind k = kind_of(kind);
    FamilySpec spec = FamilySpec::of_order(k, n);
    return spec.two_parameter() ? FamilySpec::of_sides(k, r, s) : spec;
}

py::dict report_dict(const VerificationReport& r)
{
    py::list violations;
    for (const auto& v : r.violations)
        violations.append(py::make_tuple(v.graph6, v.details));
    py::dict d;
    d["suite"] = r.suite;
    d["universe"] = r.universe;
    d["checked"] = r.checked;
    d["passed"] = r.passed();
    d["violations"] = violations;
    d["elapsed_seconds"] = r.elapsed_seconds;
    d["counters"] = r.counters;
    return d;
}

} // namespace

PYBIND11_MODULE(_ldcode, m)
{
    m.doc() = "Location-domination invariants, associated graphs and extremal constructions";
    m.attr("__version__") = "0.1.0";
    m.attr("ENUMERATION_CAP") = kEnumerationCap;
    m.attr("BIPARTITE_ENUMERATION_CAP") = kBipartiteEnumerationCap;

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<Edge>& edges) { return make_graph(n, edges); }), py::arg("n"),
             py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", [](const std::string& text) { return decode_graph6(text); })
        .def_static("from_edge_list", [](const std::string& text) { return parse_edge_list(text); })
        .def("graph6", [](const Graph& g) { return encode_graph6(g); })
        .def("edge_list", [](const Graph& g) { return to_edge_list(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", [](const Graph& g, Vertex v) { return as_list(g.neighbors(v)); })
        .def("degree", &Graph::degree)
        .def("complement", [](const Graph& g) { return complement(g); })
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("bipartition",
             [](const Graph& g) -> py::object {
                 const auto b = bipartition(g);
                 if (!b)
                     return py::none();
                 return py::make_tuple(as_list(b->u_side), as_list(b->w_side));
             })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ", graph6='" +
                   encode_graph6(g) + "')";
        });

    m.def("family", [](const std::string& kind, int n, int r, int s) { return generate_family(spec_of(kind, n, r, s)); },
          py::arg("kind"), py::arg("n") = 0, py::arg("r") = 0, py::arg("s") = 0,
          "Named family: path, cycle, wheel, complete, star (use n) or complete_bipartite, bistar (use r and s).");
    m.def("read_graph6", [](const std::string& text) { return read_graph6_lines(text); });
    m.def("canonical_graph6", [](const Graph& g) { return encode_graph6(canonical_form(g)); });
    m.def("enumerate_connected_graphs", &enumerate_connected_graphs, py::arg("n"), py::arg("bipartite_only") = false);

    m.def("is_dominating", [](const Graph& g, const std::vector<Vertex>& s) { return is_dominating(g, as_set(s, g)); });
    m.def("is_ld_set", [](const Graph& g, const std::vector<Vertex>& s) { return is_ld_set(g, as_set(s, g)); });
    m.def("is_global_ld_set",
          [](const Graph& g, const std::vector<Vertex>& s) { return is_global_ld_set(g, as_set(s, g)); });
    m.def("dominating_vertex",
          [](const Graph& g, const std::vector<Vertex>& s) { return dominating_vertex(g, as_set(s, g)); });
    m.def("lambda_", [](const Graph& g) {
        const LdCode c = lambda(g);
        return py::make_tuple(c.size, as_list(c.witness));
    }, "Location-domination number and the lexicographically smallest LD-code.");
    m.def("lambda_complement", &lambda_complement);
    m.def("lambda_global", [](const Graph& g) {
        const LdCode c = lambda_global(g);
        return py::make_tuple(c.size, as_list(c.witness));
    });
    m.def("ld_codes", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (VertexSet s : all_ld_codes(g))
            out.push_back(as_list(s));
        return out;
    });
    m.def("closed_form",
          [](const std::string& kind, const std::string& which, int n, int r, int s) {
              return closed_form(spec_of(kind, n, r, s), invariant_of(which));
          },
          py::arg("kind"), py::arg("which"), py::arg("n") = 0, py::arg("r") = 0, py::arg("s") = 0);

    py::class_<AssocGraph>(m, "AssocGraph")
        .def_property_readonly("order", &AssocGraph::order)
        .def("vertices", [](const AssocGraph& a) {
            std::vector<std::string> out;
            for (int i = 0; i < a.order(); ++i)
                out.push_back(a.name(i));
            return out;
        })
        .def("levels", [](const AssocGraph& a) {
            std::map<std::string, int> out;
            for (int i = 0; i < a.order(); ++i)
                out[a.name(i)] = a.level(i);
            return out;
        })
        .def("edges", [](const AssocGraph& a) {
            std::vector<std::tuple<std::string, std::string, Vertex>> out;
            for (const auto& e : a.edges())
                out.emplace_back(a.name(e.x), a.name(e.y), e.label);
            return out;
        })
        .def("edges_with_label", [](const AssocGraph& a, Vertex u) {
            std::vector<std::tuple<std::string, std::string, Vertex>> out;
            for (const auto& e : edges_with_label(a, u))
                out.emplace_back(a.name(e.x), a.name(e.y), e.label);
            return out;
        })
        .def("degree_of_z", [](const AssocGraph& a) { return degree_of_z(a); })
        .def("check_properties",
             [](const AssocGraph& a, int samples, std::uint64_t seed) {
                 std::mt19937_64 rng(seed);
                 const auto trails = sample_trails(a, samples, static_cast<int>(a.edges().size()), rng);
                 const auto paths = monotone_paths(a);
                 const PropertyReport r = check_properties(a, trails, paths);
                 py::dict d;
                 d["order_formula"] = r.order_formula;
                 d["bipartite"] = r.bipartite;
                 d["incident_labels_distinct"] = r.incident_labels_distinct;
                 d["cycle_label_parity"] = r.cycle_label_parity;
                 d["closed_walks"] = r.closed_walks;
                 d["monotone_paths"] = r.monotone_paths;
                 d["level_structure"] = r.level_structure;
                 d["failures"] = r.failures;
                 return d;
             },
             py::arg("samples") = 100, py::arg("seed") = 1)
        .def("select_h",
             [](const AssocGraph& a, const std::string& rule, std::uint64_t seed) {
                 ChoiceRule choice;
                 if (rule == "reverse")
                     choice.kind = ChoiceRule::Kind::reverse;
                 else if (rule == "random")
                     choice.kind = ChoiceRule::Kind::random;
                 else if (rule != "lexicographic")
                     throw GraphError("unknown choice rule '" + rule + "'");
                 choice.seed = seed;
                 return select_h(a, choice).graph;
             },
             py::arg("rule") = "lexicographic", py::arg("seed") = 0)
        .def("dot", [](const AssocGraph& a) { return to_dot(a); });

    m.def("build_associated",
          [](const Graph& g, const std::vector<Vertex>& s) { return build_associated(g, as_set(s, g)); });

    m.def("is_cactus", &is_cactus);
    m.def("cactus_stats", [](const Graph& g) {
        const CactusStats st = cactus_stats(g);
        py::dict d;
        d["cc"] = st.cc;
        d["cy"] = st.cy;
        d["ex"] = st.ex;
        d["order"] = st.order;
        d["size"] = st.size;
        return d;
    });
    m.def("tightness_check", &tightness_check);

    m.def("feasibility", &feasibility);
    m.def("construct_extremal", [](int r, int s) {
        const SubsetFamilyGraph built = construct_extremal(r, s);
        std::vector<std::string> names;
        for (Subset x : built.w_subsets)
            names.push_back(subset_name(x, r));
        py::dict d;
        d["graph"] = built.graph;
        d["w_subsets"] = names;
        d["lambda"] = built.lambda;
        d["lambda_complement"] = built.lambda_complement;
        d["provenance"] = built.provenance;
        return d;
    });
    m.def("construct_gap_minus", &construct_gap_minus);
    m.def("construct_gap_zero", &construct_gap_zero);

    m.def("suite_names", &suite_names);
    m.def("run_suite",
          [](const std::string& name, int n_max, int n_min, int samples, std::uint64_t seed, int count, int r_max,
             const std::vector<Graph>& external) {
              SuiteOptions o;
              o.n_max = n_max;
              o.n_min = n_min;
              o.samples = samples;
              o.seed = seed;
              o.count = count;
              o.r_max = r_max;
              o.external = external;
              py::gil_scoped_release release;
              VerificationReport r = run_suite(name, o);
              py::gil_scoped_acquire acquire;
              return report_dict(r);
          },
          py::arg("name"), py::arg("n_max") = 6, py::arg("n_min") = 1, py::arg("samples") = 100, py::arg("seed") = 1,
          py::arg("count") = 1000, py::arg("r_max") = 4, py::arg("external") = std::vector<Graph>{});
}
