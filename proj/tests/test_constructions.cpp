#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "caylab/constructions.hpp"
#include "caylab/iso.hpp"
#include "caylab/named_graphs.hpp"
#include "caylab/solver.hpp"
#include "oracle.hpp"

using namespace caylab;

namespace {

long long pow3(int d) {
    long long r = 1;
    while (d--) r *= 3;
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// every vertex of the set is matched, not merely of degree <= 1
bool perfect_on_set(const Graph& g, const std::vector<int>& set) {
    Bitset in(g.n);
    for (int v : set) in.set(v);
    for (int v : set)
        if (g.adj[v].count_and(in) != 1) return false;
    return true;
}

} // namespace

TEST_CASE("base3 rightmost digit") {
    CHECK(base3_rightmost(1) == 1);
    CHECK(base3_rightmost(2) == 2);
    CHECK(base3_rightmost(3) == 1);
    CHECK(base3_rightmost(6) == 2);
    CHECK(base3_rightmost(9) == 1);
    CHECK(base3_rightmost(18) == 2);
    CHECK(base3_rightmost(45) == 2); // 1200_3
    for (long long v = 1; v < 200; ++v) {
        long long w = v;
        while (w % 3 == 0) w /= 3;
        CHECK(base3_rightmost(v) == w % 3);
    }
}

TEST_CASE("derangement counts against enumeration") {
    CHECK(derangement_count(1) == 0);
    CHECK(derangement_count(2) == 1);
    CHECK(derangement_count(3) == 2);
    CHECK(derangement_count(4) == 9);
    for (int n = 1; n <= 8; ++n) CHECK(derangement_count(n) == oracle::derangements_brute(n));
    for (int n = 1; n <= 20; ++n) CHECK(derangement_count(n) == oracle::derangements_formula(n));
    // parity alternates: odd exactly when n is even
    for (int n = 1; n <= 20; ++n) CHECK((derangement_count(n) % 2 == 1) == (n % 2 == 0));
    CHECK_THROWS(derangement_count(0));
    CHECK_THROWS(derangement_count(21));
}

TEST_CASE("dihedrant matching") {
    for (int d = 0; d <= 4; ++d) {
        SubsetWitness w = dihedrant_matching(d);
        CHECK(w.graph.n == 2 * pow3(d));
        CHECK(w.graph.is_regular());
        CHECK(w.graph.degree(0) == d + 1);
        CHECK(w.graph.bipartition().has_value());
        CHECK(w.cert.kind == CertKind::MatchingSet);
        CHECK(w.cert.size == pow3(d) + 1);
        CHECK(verify_certificate(w.graph, w.cert).valid);
        CHECK(perfect_on_set(w.graph, w.cert.verts));
    }
    // the 18-vertex instance: more than half the vertices at degree one
    SubsetWitness w2 = dihedrant_matching(2);
    CHECK(w2.graph.n == 18);
    CHECK(2 * w2.cert.size > w2.graph.n);
    CHECK(sensitivity(w2.graph).value == 1);
    CHECK(oracle::sigma(w2.graph) == 1);
}

TEST_CASE("star graph subset") {
    for (int n = 3; n <= 6; ++n) {
        SubsetWitness w = star_graph_subset(n);
        CHECK(w.graph.n == factorial(n));
        CHECK(w.graph.degree(0) == n - 1);
        CHECK(w.graph.bipartition().has_value());
        CHECK(w.cert.size == factorial(n) / 2 + 1);
        CHECK(verify_certificate(w.graph, w.cert).valid);
    }
    // small cases are recognizable graphs
    CHECK(find_isomorphism(star_graph_subset(3).graph, cycle_graph(6)).has_value());
    CHECK(find_isomorphism(star_graph_subset(4).graph, generalized_petersen(12, 5)).has_value());

    // the half-plus-one set at degree <= 1 pins the sensitivity to exactly 1
    CHECK(sensitivity(star_graph_subset(3).graph).value == 1);
    CHECK(sensitivity(star_graph_subset(4).graph, 12).value == 1);
}

TEST_CASE("tight matchings") {
    for (int m = 1; m <= 3; ++m) {
        SubsetWitness w = tight_matching(m);
        int d = m + 1;
        long long order = m % 2 ? factorial(2 * m + 1) : factorial(2 * m + 1) / 2;
        CHECK(w.graph.n == order);
        CHECK(w.graph.is_regular());
        CHECK(w.graph.degree(0) == d);
        CHECK(w.cert.size == (long long)(m + 1) * order / (2 * m + 1));
        // meets the matching upper bound d*n/(2d-1) exactly
        CHECK(w.cert.size * (2 * d - 1) == (long long)d * w.graph.n);
        CHECK(verify_certificate(w.graph, w.cert).valid);
        CHECK(perfect_on_set(w.graph, w.cert.verts));
    }
    SubsetWitness w1 = tight_matching(1);
    CHECK(w1.graph.n == 6);
    CHECK(w1.cert.size == 4);
    CHECK(find_isomorphism(w1.graph, cycle_graph(6)).has_value());
    CHECK(tight_matching(2).cert.size == 36);
}

TEST_CASE("arc family basics") {
    ArcFamily fam;
    auto mk = [](int ground, std::initializer_list<int> bits) {
        Bitset b(ground);
        for (int i : bits) b.set(i);
        return b;
    };
    fam.sets = {mk(3, {0, 1}), mk(3, {1}), mk(3, {1, 2})};
    CHECK(fam.r() == 2);
    CHECK(fam.t() == 2); // the middle set has no private element against the others

    ArcFamily disjoint;
    disjoint.sets = {mk(6, {0, 1}), mk(6, {2, 3}), mk(6, {4, 5})};
    CHECK(disjoint.r() == 2);
    CHECK(disjoint.t() == 3);

    ArcFamily empty;
    CHECK(empty.r() == 0);
    CHECK(empty.t() == 0);
}

TEST_CASE("boolean lattice") {
    for (int n = 1; n <= 5; ++n) {
        LatticeModel lat = LatticeModel::boolean_lattice(n);
        CHECK((int)lat.members.size() == 1 << n);
        CHECK((long long)lat.covers.size() == (long long)n << (n - 1));
        Graph cover = lat.cover_graph();
        // member i is the mask i, so the cover graph is the hypercube itself
        CHECK(cover.fingerprint() == hypercube(n).fingerprint());
    }
    LatticeModel l3 = LatticeModel::boolean_lattice(3);
    Bitset b(3);
    b.set(0);
    b.set(2);
    CHECK(l3.find(b) == 5);
    CHECK(l3.join(1, 2) == 3);
    CHECK(l3.join(5, 2) == 7);
    CHECK(l3.join(0, 6) == 6);
}

TEST_CASE("from_members validates lattice structure") {
    auto mk = [](int ground, std::initializer_list<int> bits) {
        Bitset b(ground);
        for (int i : bits) b.set(i);
        return b;
    };
    // a diamond is fine
    std::vector<Bitset> diamond{mk(2, {}), mk(2, {0}), mk(2, {1}), mk(2, {0, 1})};
    LatticeModel lat = LatticeModel::from_members(2, diamond);
    CHECK(lat.covers.size() == 4);
    CHECK(lat.join(1, 2) == 3);

    // missing top
    CHECK_THROWS(LatticeModel::from_members(2, {mk(2, {}), mk(2, {0}), mk(2, {1})}));
    // duplicate member
    CHECK_THROWS(LatticeModel::from_members(2, {mk(2, {}), mk(2, {0}), mk(2, {0}), mk(2, {0, 1})}));
    // join of {0} and {1} has two incomparable minimal upper bounds
    CHECK_THROWS(LatticeModel::from_members(
        4, {mk(4, {}), mk(4, {0}), mk(4, {1}), mk(4, {0, 1, 2}), mk(4, {0, 1, 3}),
            mk(4, {0, 1, 2, 3})}));
}

TEST_CASE("lattice subset on hypercubes") {
    for (int d = 1; d <= 8; ++d) {
        LatticeModel lat = LatticeModel::boolean_lattice(d);
        ArcFamily fam = cfgs_family(d);
        int s = 1;
        while (s * s < d) ++s; // ceil(sqrt d)
        CHECK(fam.r() == s);
        CHECK(fam.t() == (d + s - 1) / s);

        LatticeSubsetReport rep = lattice_subset(lat, fam);
        CHECK(rep.k == s);
        CHECK(rep.imbalance >= 1);
        CHECK(verify_certificate(lat.cover_graph(), rep.cert).valid);
        CHECK(2 * rep.cert.size == (1LL << d) + rep.imbalance);
        REQUIRE(rep.ie_estimate.has_value());
        // alternating-sum estimate equals the signed imbalance of X itself
        CHECK(*rep.ie_estimate == (2 * rep.x_size - (1LL << d)) / 2);
    }
}

TEST_CASE("cfgs subset") {
    for (int d = 1; d <= 10; ++d) {
        SubsetWitness w = cfgs_subset(d);
        CHECK(w.graph.fingerprint() == hypercube(d).fingerprint());
        int s = 1;
        while (s * s < d) ++s;
        CHECK(w.cert.k == s);
        CHECK(w.cert.size >= (1LL << (d - 1)) + 1);
        CHECK(verify_certificate(w.graph, w.cert).valid);
    }
    CHECK(cfgs_subset(4).cert.size == 9);
    // the degree-2 set of nine vertices pins the sensitivity of the 4-cube
    CHECK(oracle::sigma(hypercube(4)) == 2);
    CHECK(sensitivity(hypercube(4), 8).value == 2);
}

TEST_CASE("lattice subset ignores family-free input") {
    LatticeSubsetReport rep = lattice_subset(LatticeModel::boolean_lattice(3), ArcFamily{});
    // with no arcs the up-set is empty, so X is the odd-rank class
    CHECK(rep.k == 0);
    CHECK(rep.x_size == 4);
    CHECK(rep.imbalance == 0);
    CHECK(!rep.ie_estimate.has_value());
}

TEST_CASE("torus subsets") {
    for (auto [i, j] : std::vector<std::pair<int, int>>{
             {4, 4}, {4, 6}, {6, 4}, {6, 6}, {8, 6}, {4, 10}, {8, 8}, {10, 6}}) {
        SubsetWitness w = torus_subset(i, j);
        CHECK(w.graph.n == i * j);
        CHECK(w.graph.fingerprint() ==
              cartesian_product(cycle_graph(i), cycle_graph(j)).fingerprint());
        CHECK(w.cert.k == 2);
        CHECK(2 * w.cert.size > (long long)i * j);
        CHECK(verify_certificate(w.graph, w.cert).valid);
    }
    CHECK(torus_subset(4, 4).cert.size == 9);
    CHECK_THROWS(torus_subset(3, 4));
    CHECK_THROWS(torus_subset(4, 2));
}

TEST_CASE("z3r subsets") {
    for (int r = 1; r <= 4; ++r) {
        Z3rWitness w = z3r_subset(r);
        CHECK(w.graph.n == pow3(r));
        CHECK(w.graph.is_regular());
        CHECK(w.graph.degree(0) == 2 * r);
        CHECK(w.cert.size == pow3(r - 1) + 1);
        CHECK(w.cert.k == 1);
        CHECK(verify_certificate(w.graph, w.cert).valid);
        CHECK(w.independent.size == pow3(r - 1));
        CHECK(verify_certificate(w.graph, w.independent).valid);
        // the two witnesses are disjoint
        std::set<int> a(w.cert.verts.begin(), w.cert.verts.end());
        for (int v : w.independent.verts) CHECK(!a.count(v));
    }
    Z3rWitness w2 = z3r_subset(2);
    CHECK(independence_number(w2.graph).value == 3);
    CHECK(sensitivity(w2.graph).value == 1);
    CHECK(oracle::sigma(w2.graph) == 1);
}

TEST_CASE("star adjacency flips parity") {
    SubsetWitness w = star_graph_subset(4);
    auto bip = w.graph.bipartition();
    REQUIRE(bip.has_value());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int v = int(rng() % w.graph.n);
        for (int u : w.graph.nbr[v]) CHECK((*bip)[u] != (*bip)[v]);
    }
}
