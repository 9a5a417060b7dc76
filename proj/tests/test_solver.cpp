#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "caylab/named_graphs.hpp"
#include "caylab/solver.hpp"
#include "oracle.hpp"

using namespace caylab;

namespace {

Graph random_graph(std::mt19937& rng, int n, int denom) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (int(rng() % denom) == 0) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

std::vector<Graph> corpus() {
    std::vector<Graph> out;
    out.push_back(cycle_graph(5));
    out.push_back(cycle_graph(6));
    out.push_back(path_graph(7));
    out.push_back(complete_graph(5));
    out.push_back(hypercube(3));
    out.push_back(hypercube(4));
    out.push_back(generalized_petersen(5, 2));
    out.push_back(generalized_petersen(8, 3));
    std::mt19937 rng(4242);
    for (int i = 0; i < 8; ++i) out.push_back(random_graph(rng, 9 + i, 2 + i % 3));
    return out;
}

} // namespace

TEST_CASE("budget parsing") {
    Budget b = Budget::parse("600s");
    CHECK(b.max_seconds == doctest::Approx(600));
    CHECK(b.max_nodes == 0);
    Budget n = Budget::parse("1e7nodes");
    CHECK(n.max_nodes == 10'000'000);
    Budget none = Budget::parse("none");
    CHECK(none.max_nodes == 0);
    CHECK(none.max_seconds == 0);
    CHECK_THROWS(Budget::parse("yesterday"));
}

TEST_CASE("max low degree set matches enumeration") {
    for (const Graph& g : corpus())
        for (int k = 0; k <= 3; ++k) {
            SolveResult r = max_low_degree_set(g, k);
            REQUIRE(r.status == SolveStatus::Exact);
            CHECK(r.value == oracle::max_low_degree_set(g, k));
            REQUIRE(r.witness.has_value());
            CHECK(verify_certificate(g, *r.witness).valid);
        }
}

TEST_CASE("independence number matches enumeration") {
    for (const Graph& g : corpus()) {
        SolveResult r = independence_number(g);
        REQUIRE(r.status == SolveStatus::Exact);
        CHECK(r.value == oracle::alpha(g));
    }
    CHECK(independence_number(generalized_petersen(5, 2)).value == 4);
    CHECK(independence_number(hypercube(4)).value == 8);
}

TEST_CASE("sensitivity matches enumeration") {
    for (const Graph& g : corpus()) {
        if (g.m == 0) continue;
        SolveResult r = sensitivity(g);
        REQUIRE(r.status == SolveStatus::Exact);
        CHECK(r.value == oracle::sigma(g));
        REQUIRE(r.witness.has_value());
        CHECK(verify_certificate(g, *r.witness).valid);
        CHECK((long long)r.witness->verts.size() > oracle::alpha(g));
    }
}

TEST_CASE("sensitivity accepts and validates hints") {
    Graph q3 = hypercube(3);
    SolveResult plain = sensitivity(q3);
    SolveResult hinted = sensitivity(q3, 4);
    CHECK(plain.value == hinted.value);
    CHECK(plain.value == 2);
    CHECK_THROWS(sensitivity(q3, 5)); // wrong alpha must be rejected
}

TEST_CASE("delta beta matches enumeration") {
    for (const Graph& g : corpus()) {
        for (Rational beta : {Rational(1, 2), Rational(3, 5), Rational(3, 4)}) {
            SolveResult r = delta_beta(g, beta);
            REQUIRE(r.status == SolveStatus::Exact);
            CHECK(r.value == oracle::delta_beta(g, beta.ceil_times(g.n)));
        }
        // beta = 1 forces the whole vertex set
        CHECK(delta_beta(g, Rational(1, 1)).value == g.max_degree());
    }
    CHECK(delta_beta(cycle_graph(6), Rational(2, 3)).value == 1);
}

TEST_CASE("iota matches enumeration") {
    for (const Graph& g : corpus()) {
        if (g.n > 18) continue;
        for (int k = 0; k <= 2; ++k) {
            SolveResult r = iota(g, k);
            REQUIRE(r.status == SolveStatus::Exact);
            bool feasible = false;
            long long want = oracle::iota(g, k, &feasible);
            CHECK(r.feasible == feasible);
            if (feasible) {
                CHECK(r.value == want);
                REQUIRE(r.witness.has_value());
                CHECK(verify_certificate(g, *r.witness).valid);
            }
        }
    }
    // K_4 has no partition into two sides of max degree 0
    SolveResult k4 = iota(complete_graph(4), 0);
    CHECK(!k4.feasible);
    CHECK(iota(complete_graph(2), 0).value == 0);
    CHECK(iota(cycle_graph(6), 1).value == 2);
}

TEST_CASE("kappa search matches embedding enumeration") {
    for (const Graph& g : corpus()) {
        if (g.n > 16) continue;
        SolveResult r = kappa_search(g, 4);
        REQUIRE(r.status == SolveStatus::Exact);
        CHECK(r.value == oracle::kappa(g));
        if (r.value >= 1) {
            REQUIRE(r.witness.has_value());
            CHECK(verify_certificate(g, *r.witness).valid);
        }
    }
    CHECK(kappa_search(hypercube(3), 4).value == 3);
    CHECK(kappa_search(generalized_petersen(8, 3), 4).value == 1); // girth 6
    CHECK(kappa_search(complete_graph(5), 4).value == 2);
}

TEST_CASE("value monotonicity") {
    Graph g = generalized_petersen(5, 2);
    long long prev = -1;
    for (int k = 0; k <= 3; ++k) {
        long long v = max_low_degree_set(g, k).value;
        CHECK(v >= prev);
        prev = v;
    }
    CHECK(delta_beta(g, Rational(1, 2)).value <= delta_beta(g, Rational(3, 4)).value);
}

TEST_CASE("budgets degrade to bounds") {
    Graph g = cartesian_product(cycle_graph(8), cycle_graph(8));
    Budget tiny;
    tiny.max_nodes = 5;
    SolveResult r = max_low_degree_set(g, 1, tiny);
    CHECK(r.status != SolveStatus::Exact);
    CHECK(r.nodes <= 64); // stops promptly after the cap

    SolveResult s = sensitivity(g, {}, tiny);
    if (s.status == SolveStatus::Interval) CHECK(s.value <= s.value_hi);
}

TEST_CASE("target short circuit keeps soundness") {
    Graph g = hypercube(4);
    SolveResult r = max_low_degree_set(g, 2, {}, 9);
    CHECK(r.value >= 9);
    REQUIRE(r.witness.has_value());
    CHECK(verify_certificate(g, *r.witness).valid);
}

TEST_CASE("deterministic replay") {
    Graph g = generalized_petersen(8, 3);
    SolveResult a = sensitivity(g);
    SolveResult b = sensitivity(g);
    CHECK(a.value == b.value);
    CHECK(a.nodes == b.nodes);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.witness->verts == b.witness->verts);
}

TEST_CASE("square root cube bound") {
    // exact sigma is at least the square root of exact kappa on bipartite
    // Cayley-style graphs in the corpus
    for (const Graph& g : {hypercube(3), hypercube(4), generalized_petersen(8, 3)}) {
        long long sig = sensitivity(g).value;
        long long kap = kappa_search(g, 4).value;
        CHECK(double(sig) >= std::sqrt(double(kap)) - 1e-9);
    }
}
