#include "caylab/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>

#include "caylab/util.hpp"

namespace caylab {

std::vector<double> spectrum(const Graph& g) {
    if (g.n > 3000) throw parse_error("spectrum capped at 3000 vertices");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (int v = 0; v < g.n; ++v) {
        for (int u : g.nbr[v]) a(v, u) = 1.0;
        if (g.loop[v]) a(v, v) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw parse_error("eigenvalue solve failed");
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + g.n);

    double tr = 0, tr2 = 0;
    for (double x : ev) {
        tr += x;
        tr2 += x * x;
    }
    if (std::fabs(tr - double(g.loop_count())) > 1e-6 * g.n)
        throw parse_error("spectrum trace check failed");
    if (std::fabs(tr2 - double(2 * g.m + g.loop_count())) > 1e-5 * g.n)
        throw parse_error("spectrum trace-square check failed");
    return ev;
}

NdlSummary ndl_summary(const Graph& g) {
    NdlSummary s;
    s.n = g.n;
    s.regular = true;
    int d0 = int(g.nbr[0].size()) + g.loop[0];
    for (int v = 0; v < g.n; ++v)
        if (int(g.nbr[v].size()) + g.loop[v] != d0) {
            s.regular = false;
            break;
        }
    s.d = s.regular ? d0 : 0;
    s.bipartite = g.bipartition().has_value();
    if (!s.regular) return s;

    std::vector<double> ev = spectrum(g);
    // drop one copy of d, and of -d when bipartite, then take the extreme
    int hi = g.n - 1, lo = 0;
    if (std::fabs(ev[hi] - s.d) > 1e-6) throw parse_error("regular graph misses eigenvalue d");
    --hi;
    if (s.bipartite) {
        if (std::fabs(ev[lo] + s.d) > 1e-6)
            throw parse_error("bipartite regular graph misses eigenvalue -d");
        ++lo;
    }
    s.lambda = 0;
    if (lo <= hi) s.lambda = std::max(std::fabs(ev[lo]), std::fabs(ev[hi]));
    return s;
}

double mixing_sensitivity_bound(const NdlSummary& s) {
    if (!s.regular) throw parse_error("mixing bound needs a regular graph");
    return (double(s.d) - s.lambda) / 2.0;
}

long long ordered_edges_between(const Graph& g, const std::vector<int>& s,
                                const std::vector<int>& t) {
    Bitset in_t(g.n);
    for (int v : t) in_t.set(v);
    long long count = 0;
    for (int v : s) {
        count += g.adj[v].count_and(in_t);
        if (g.loop[v] && in_t.test(v)) ++count;
    }
    return count;
}

MinimalityDiagnostic minimality_diagnostic(const FiniteGroup& grp, const ConnectionSet& c) {
    NdlSummary s = ndl_summary(cayley_graph(grp, c));
    MinimalityDiagnostic d;
    d.lambda = s.lambda;
    d.threshold = double(s.d) - 4.0;
    d.compatible = d.lambda >= d.threshold - 1e-9;

    d.minimal = true;
    for (int e : c.elems) {
        if (grp.inv(e) > e) continue; // handle each {e, e^-1} pair once
        std::vector<int> rest;
        for (int x : c.elems)
            if (x != e && x != grp.inv(e)) rest.push_back(x);
        bool still_connected = !rest.empty() && cayley_graph(grp, connection_set(grp, rest)).connected();
        if (still_connected) {
            d.minimal = false;
            break;
        }
    }
    d.consistent = !d.minimal || d.compatible;
    return d;
}

} // namespace caylab
