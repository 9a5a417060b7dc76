#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "caylab/certificate.hpp"
#include "caylab/constructions.hpp"
#include "caylab/coxeter.hpp"
#include "caylab/graph.hpp"
#include "caylab/group.hpp"
#include "caylab/incidence.hpp"
#include "caylab/iso.hpp"
#include "caylab/named_graphs.hpp"
#include "caylab/solver.hpp"
#include "caylab/spectral.hpp"
#include "caylab/util.hpp"

namespace py = pybind11;
using namespace caylab;

namespace {
Budget budget_arg(const std::string& spec) { return Budget::parse(spec); }
} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cayley-graph sensitivity toolkit";

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_readonly("m", &Graph::m)
        .def_readonly("name", &Graph::name)
        .def_readonly("vertex_transitive", &Graph::vertex_transitive)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("has_edge", &Graph::has_edge)
        .def("loop_count", &Graph::loop_count)
        .def("neighbors", [](const Graph& g, int v) { return g.nbr.at(v); })
        .def("induced_max_degree",
             [](const Graph& g, const std::vector<int>& s) { return g.induced_max_degree(s); })
        .def("connected", &Graph::connected)
        .def("bipartition", &Graph::bipartition)
        .def("girth", &Graph::girth)
        .def("serialize", &Graph::canonical_serialize)
        .def("fingerprint", &Graph::fingerprint)
        .def("to_dot", &Graph::to_dot)
        .def_static("parse", &Graph::parse)
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"),
                    py::arg("loops") = std::vector<int>{}, py::arg("name") = "")
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n) + " m=" + std::to_string(g.m) + ">";
        });

    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("complete_graph", &complete_graph);
    m.def("hypercube", &hypercube);
    m.def("generalized_petersen", &generalized_petersen);
    m.def("kronecker_double_cover", &kronecker_double_cover);
    m.def("cartesian_product", &cartesian_product);
    m.def("is_covering_map", &is_covering_map);

    py::class_<Certificate>(m, "Certificate")
        .def_property_readonly("kind", [](const Certificate& c) { return to_string(c.kind); })
        .def_readonly("graph_fingerprint", &Certificate::graph_fingerprint)
        .def_readonly("k", &Certificate::k)
        .def_readonly("size", &Certificate::size)
        .def_readonly("verts", &Certificate::verts)
        .def_readonly("verts_b", &Certificate::verts_b)
        .def("serialize", &Certificate::serialize)
        .def_static("parse", &Certificate::parse)
        .def("__repr__", [](const Certificate& c) {
            return "<Certificate " + to_string(c.kind) + " size=" + std::to_string(c.size) +
                   " k=" + std::to_string(c.k) + ">";
        });

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("valid", &VerifyReport::valid)
        .def_readonly("reason", &VerifyReport::reason)
        .def("__bool__", [](const VerifyReport& r) { return r.valid; });
    m.def("verify_certificate", &verify_certificate);

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def("order", &FiniteGroup::order)
        .def("identity", &FiniteGroup::identity)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("label", &FiniteGroup::label)
        .def_property_readonly("spec", [](const FiniteGroup& g) { return g.spec(); })
        .def("generators", &FiniteGroup::generators)
        .def("element_from_label", &FiniteGroup::element_from_label)
        .def("key_of", &FiniteGroup::key_of)
        .def("index_of_key", &FiniteGroup::index_of_key)
        .def("__len__", &FiniteGroup::order);
    m.def("group_make", &group_make);

    py::class_<ConnectionSet>(m, "ConnectionSet")
        .def_readonly("elems", &ConnectionSet::elems)
        .def_readonly("generates", &ConnectionSet::generates);
    m.def("connection_set", &connection_set);
    m.def("random_connection_set", &random_connection_set);
    m.def("cayley_graph", &cayley_graph, py::arg("group"), py::arg("connection"),
          py::arg("name") = "");

    m.def("base3_rightmost", &base3_rightmost);
    m.def("derangement_count", &derangement_count);

    py::class_<SubsetWitness>(m, "SubsetWitness")
        .def_readonly("graph", &SubsetWitness::graph)
        .def_readonly("cert", &SubsetWitness::cert);
    m.def("dihedrant_matching", &dihedrant_matching);
    m.def("star_graph_subset", &star_graph_subset);
    m.def("tight_matching", &tight_matching);
    m.def("cfgs_subset", &cfgs_subset);
    m.def("torus_subset", &torus_subset);

    py::class_<Z3rWitness>(m, "Z3rWitness")
        .def_readonly("graph", &Z3rWitness::graph)
        .def_readonly("cert", &Z3rWitness::cert)
        .def_readonly("independent", &Z3rWitness::independent);
    m.def("z3r_subset", &z3r_subset);

    py::class_<CoxeterSystem>(m, "CoxeterSystem")
        .def_readonly("type_name", &CoxeterSystem::type_name)
        .def_readonly("rank", &CoxeterSystem::rank)
        .def_property_readonly("group", [](const CoxeterSystem& s) { return s.group; })
        .def("order", &CoxeterSystem::order)
        .def("reflection_count",
             [](const CoxeterSystem& s) { return int(s.reflections.size()); })
        .def("__repr__", [](const CoxeterSystem& s) {
            return "<CoxeterSystem " + s.type_name + " order=" + std::to_string(s.order()) + ">";
        });
    m.def("coxeter_system", &coxeter_system);
    m.def("coxeter_cayley", &coxeter_cayley);
    m.def("kappa_formula", &kappa_formula);

    py::class_<CubeLikeResult>(m, "CubeLikeResult")
        .def_readonly("cube_like", &CubeLikeResult::cube_like)
        .def_readonly("witness", &CubeLikeResult::witness)
        .def_readonly("log", &CubeLikeResult::log)
        .def("__bool__", [](const CubeLikeResult& r) { return r.cube_like; });
    m.def("is_cube_like", &is_cube_like);
    m.def("cube_like_subset", &cube_like_subset);
    m.def("bn_dn_subset", [](const std::string& family, int n) {
        if (family.size() != 1) throw parse_error("family must be one letter");
        return bn_dn_subset(family[0], n);
    });

    py::class_<SolveResult>(m, "SolveResult")
        .def_property_readonly("status",
                               [](const SolveResult& r) { return to_string(r.status); })
        .def_readonly("value", &SolveResult::value)
        .def_readonly("value_hi", &SolveResult::value_hi)
        .def_readonly("feasible", &SolveResult::feasible)
        .def_readonly("nodes", &SolveResult::nodes)
        .def_readonly("seconds", &SolveResult::seconds)
        .def_readonly("witness", &SolveResult::witness)
        .def("__repr__", [](const SolveResult& r) {
            return "<SolveResult " + std::to_string(r.value) + " " + to_string(r.status) + ">";
        });

    m.def(
        "max_low_degree_set",
        [](const Graph& g, int k, const std::string& budget, long long target) {
            return max_low_degree_set(g, k, budget_arg(budget), target);
        },
        py::arg("graph"), py::arg("k"), py::arg("budget") = "none", py::arg("target") = -1);
    m.def(
        "independence_number",
        [](const Graph& g, const std::string& budget) {
            return independence_number(g, budget_arg(budget));
        },
        py::arg("graph"), py::arg("budget") = "none");
    m.def(
        "sensitivity",
        [](const Graph& g, std::optional<long long> alpha_hint, const std::string& budget) {
            return sensitivity(g, alpha_hint, budget_arg(budget));
        },
        py::arg("graph"), py::arg("alpha_hint") = std::nullopt, py::arg("budget") = "none");
    m.def(
        "delta_beta",
        [](const Graph& g, const std::string& beta, const std::string& budget) {
            return delta_beta(g, Rational::parse(beta), budget_arg(budget));
        },
        py::arg("graph"), py::arg("beta"), py::arg("budget") = "none");
    m.def(
        "iota",
        [](const Graph& g, int k, const std::string& budget) {
            return iota(g, k, budget_arg(budget));
        },
        py::arg("graph"), py::arg("k"), py::arg("budget") = "none");
    m.def(
        "kappa_search",
        [](const Graph& g, int d_max, const std::string& budget) {
            return kappa_search(g, d_max, budget_arg(budget));
        },
        py::arg("graph"), py::arg("d_max") = 6, py::arg("budget") = "none");

    m.def("spectrum", &spectrum);
    py::class_<NdlSummary>(m, "NdlSummary")
        .def_readonly("n", &NdlSummary::n)
        .def_readonly("regular", &NdlSummary::regular)
        .def_readonly("d", &NdlSummary::d)
        .def_readonly("bipartite", &NdlSummary::bipartite)
        .def_readonly("lambda_", &NdlSummary::lambda);
    m.def("ndl_summary", &ndl_summary);
    m.def("mixing_sensitivity_bound", &mixing_sensitivity_bound);
    m.def("ordered_edges_between", &ordered_edges_between);

    py::class_<MinimalityDiagnostic>(m, "MinimalityDiagnostic")
        .def_readonly("lambda_", &MinimalityDiagnostic::lambda)
        .def_readonly("threshold", &MinimalityDiagnostic::threshold)
        .def_readonly("compatible", &MinimalityDiagnostic::compatible)
        .def_readonly("minimal", &MinimalityDiagnostic::minimal)
        .def_readonly("consistent", &MinimalityDiagnostic::consistent);
    m.def("minimality_diagnostic", &minimality_diagnostic);

    m.def("polarity_graph", &polarity_graph);
    m.def("levi_graph", &levi_graph);
    py::class_<DihedrantLevi>(m, "DihedrantLevi")
        .def_readonly("difference_set", &DihedrantLevi::difference_set)
        .def_readonly("graph", &DihedrantLevi::graph);
    m.def("dihedrant_levi", &dihedrant_levi);
    py::class_<LpsGraph>(m, "LpsGraph")
        .def_readonly("p", &LpsGraph::p)
        .def_readonly("q", &LpsGraph::q)
        .def_readonly("group", &LpsGraph::group)
        .def_readonly("graph", &LpsGraph::graph)
        .def_readonly("bipartite", &LpsGraph::bipartite)
        .def_readonly("quads", &LpsGraph::quads);
    m.def("lps_graph", &lps_graph);
    m.def("y_graph", &y_graph);

    m.def("find_isomorphism", &find_isomorphism, py::arg("a"), py::arg("b"),
          py::arg("node_limit") = 50'000'000LL);
    m.def("check_isomorphism", &check_isomorphism);
}
