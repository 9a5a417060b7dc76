#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "caylab/graph.hpp"
#include "caylab/group.hpp"
#include "caylab/iso.hpp"
#include "caylab/named_graphs.hpp"
#include "caylab/util.hpp"

using namespace caylab;

namespace {

int element_order(const FiniteGroup& g, int x) {
    int e = x, n = 1;
    while (e != g.identity()) {
        e = g.mul(e, x);
        ++n;
    }
    return n;
}

int count_involutions(const FiniteGroup& g) {
    int c = 0;
    for (int x = 1; x < g.order(); ++x) c += g.mul(x, x) == g.identity();
    return c;
}

void check_axioms(const FiniteGroup& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a) {
        CHECK(g.mul(a, g.identity()) == a);
        CHECK(g.mul(g.identity(), a) == a);
        CHECK(g.mul(a, g.inv(a)) == g.identity());
        CHECK(g.mul(g.inv(a), a) == g.identity());
    }
    // spot-check associativity
    for (int a = 0; a < n; a += 3)
        for (int b = 1; b < n; b += 5)
            for (int c = 2; c < n; c += 7)
                CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

} // namespace

TEST_CASE("cyclic group") {
    FiniteGroup g = group_make("cyclic:7");
    CHECK(g.order() == 7);
    check_axioms(g);
    for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
            CHECK(g.key_of(g.mul(a, b)) == (g.key_of(a) + g.key_of(b)) % 7);
    CHECK(g.index_of_key(3) >= 0);
    CHECK(g.index_of_key(9) == -1);
}

TEST_CASE("dihedral group") {
    FiniteGroup g = group_make("dihedral:9");
    CHECK(g.order() == 18);
    check_axioms(g);
    int a = g.index_of_key(2);  // rotation by one
    int b = g.index_of_key(1);  // the base reflection
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    CHECK(element_order(g, a) == 9);
    CHECK(element_order(g, b) == 2);
    // b a b = a^{-1}
    CHECK(g.mul(g.mul(b, a), b) == g.inv(a));
    // the involutions are exactly the 9 reflections (odd keys)
    for (int x = 0; x < 18; ++x) {
        bool refl = g.key_of(x) & 1;
        CHECK((element_order(g, x) == 2) == refl);
    }
}

TEST_CASE("symmetric group composition order") {
    FiniteGroup g = group_make("symmetric:4");
    CHECK(g.order() == 24);
    CHECK(g.perm_degree() == 4);
    check_axioms(g);

    std::vector<int> p{1, 0, 2, 3}; // (0 1)
    std::vector<int> q{0, 2, 1, 3}; // (1 2)
    int ip = g.index_of_perm(p), iq = g.index_of_perm(q);
    REQUIRE(ip >= 0);
    REQUIRE(iq >= 0);
    // mul applies the left factor first: (p*q)(x) = q(p(x))
    std::vector<int> want(4);
    for (int x = 0; x < 4; ++x) want[x] = q[p[x]];
    CHECK(g.perm_of(g.mul(ip, iq)) == want);
    CHECK(g.index_of_perm(want) == g.mul(ip, iq));

    // all 24 permutations appear exactly once
    std::set<std::vector<int>> seen;
    for (int x = 0; x < 24; ++x) seen.insert(g.perm_of(x));
    CHECK(seen.size() == 24);
}

TEST_CASE("alternating group is the even half") {
    FiniteGroup g = group_make("alternating:4");
    CHECK(g.order() == 12);
    check_axioms(g);
    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> p = g.perm_of(x);
        int inversions = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
        CHECK(inversions % 2 == 0);
    }
}

TEST_CASE("signed permutation groups") {
    FiniteGroup b3 = group_make("signed:3");
    CHECK(b3.order() == 48);
    check_axioms(b3);
    FiniteGroup d3 = group_make("even-signed:3");
    CHECK(d3.order() == 24);

    // decode/encode round trip
    for (int x = 0; x < b3.order(); ++x) {
        SignedPermElement e = signed_decode(b3, x);
        CHECK(signed_encode(b3, e) == x);
    }
    // D_n elements all flip an even number of signs
    for (int x = 0; x < d3.order(); ++x)
        CHECK(__builtin_popcount(signed_decode(d3, x).flips) % 2 == 0);

    // composition law (A,p)*(B,t) = (A xor p^{-1}(B), p*t)
    for (int x = 0; x < b3.order(); x += 5)
        for (int y = 0; y < b3.order(); y += 7) {
            SignedPermElement a = signed_decode(b3, x), b = signed_decode(b3, y);
            SignedPermElement c;
            c.p.resize(3);
            for (int i = 0; i < 3; ++i) c.p[i] = b.p[a.p[i]];
            uint32_t pulled = 0;
            for (int i = 0; i < 3; ++i)
                if (b.flips >> a.p[i] & 1) pulled |= 1u << i;
            c.flips = a.flips ^ pulled;
            CHECK(signed_encode(b3, c) == b3.mul(x, y));
        }
}

TEST_CASE("elementary abelian group") {
    FiniteGroup g = group_make("elementary:3^2");
    CHECK(g.order() == 9);
    check_axioms(g);
    for (int x = 1; x < 9; ++x) CHECK(element_order(g, x) == 3);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) CHECK(g.mul(x, y) == g.mul(y, x));

    FiniteGroup z8 = group_make("elementary:2^3");
    CHECK(z8.order() == 8);
    for (int x = 1; x < 8; ++x) CHECK(element_order(z8, x) == 2);
}

TEST_CASE("order 16 groups differ by involution count") {
    FiniteGroup pauli = group_make("pauli");
    FiniteGroup m16 = group_make("modular:16");
    FiniteGroup qd16 = group_make("quasidihedral:16");
    CHECK(pauli.order() == 16);
    CHECK(m16.order() == 16);
    CHECK(qd16.order() == 16);
    check_axioms(pauli);
    check_axioms(m16);
    check_axioms(qd16);
    CHECK(count_involutions(pauli) == 7);
    CHECK(count_involutions(m16) == 3);
    CHECK(count_involutions(qd16) == 5);
}

TEST_CASE("product groups") {
    FiniteGroup g = group_make("product:(cyclic:2,cyclic:3)");
    CHECK(g.order() == 6);
    check_axioms(g);
    CHECK(g.factors().size() == 2);
    // isomorphic to the cyclic group of order 6: some element has order 6
    int best = 0;
    for (int x = 0; x < 6; ++x) best = std::max(best, element_order(g, x));
    CHECK(best == 6);

    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> comp = g.product_split(x);
        CHECK(g.product_index(comp) == x);
    }
    // componentwise multiplication
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            auto cx = g.product_split(x), cy = g.product_split(y);
            std::vector<int> cz(2);
            for (int i = 0; i < 2; ++i)
                cz[i] = g.factors()[i].mul(cx[i], cy[i]);
            CHECK(g.mul(x, y) == g.product_index(cz));
        }

    FiniteGroup h = group_make("product:(symmetric:3,cyclic:2)");
    CHECK(h.order() == 12);
    check_axioms(h);
}

TEST_CASE("group construction is deterministic") {
    FiniteGroup a = group_make("dihedral:6");
    FiniteGroup b = group_make("dihedral:6");
    REQUIRE(a.order() == b.order());
    for (int x = 0; x < a.order(); ++x) {
        CHECK(a.key_of(x) == b.key_of(x));
        CHECK(a.label(x) == b.label(x));
    }
    CHECK(a.generators() == b.generators());
}

TEST_CASE("connection sets") {
    FiniteGroup g = group_make("cyclic:6");
    int one = g.index_of_key(1), five = g.index_of_key(5);
    CHECK_THROWS_AS(connection_set(g, {one}), parse_error);          // missing inverse
    CHECK_THROWS_AS(connection_set(g, {g.identity(), one}), parse_error);
    ConnectionSet c = connection_set(g, {one, five});
    CHECK(c.elems.size() == 2);
    CHECK(c.generates);

    int three = g.index_of_key(3);
    ConnectionSet c3 = connection_set(g, {three}); // an involution closes itself
    CHECK(!c3.generates);

    Graph cay = cayley_graph(g, c, "hexagon");
    CHECK(cay.vertex_transitive);
    CHECK(cay.is_regular());
    CHECK(cay.degree(0) == 2);
    CHECK(find_isomorphism(cay, cycle_graph(6)).has_value());

    // disconnected Cayley graph from a non-generating set
    CHECK(!cayley_graph(g, c3).connected());
}

TEST_CASE("random connection sets replay") {
    FiniteGroup g = group_make("symmetric:4");
    ConnectionSet a = random_connection_set(g, 5, 99);
    ConnectionSet b = random_connection_set(g, 5, 99);
    CHECK(a.elems == b.elems);
    CHECK(int(a.elems.size()) >= 5);
    for (int e : a.elems)
        CHECK(std::find(a.elems.begin(), a.elems.end(), g.inv(e)) != a.elems.end());
    ConnectionSet other = random_connection_set(g, 5, 100);
    CHECK(a.elems != other.elems); // overwhelmingly likely for distinct seeds
}

TEST_CASE("cayley graph respects labels") {
    // the star generators of the symmetric group give a bipartite graph
    FiniteGroup s4 = group_make("symmetric:4");
    std::vector<int> star;
    for (int i = 1; i < 4; ++i) {
        std::vector<int> p{0, 1, 2, 3};
        std::swap(p[0], p[i]);
        star.push_back(s4.index_of_perm(p));
    }
    Graph g = cayley_graph(s4, connection_set(s4, star));
    CHECK(g.n == 24);
    CHECK(g.degree(0) == 3);
    CHECK(g.bipartition().has_value());
    CHECK(g.girth() == 6);
}
