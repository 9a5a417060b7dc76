#include "caylab/constructions.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>

#include "caylab/named_graphs.hpp"

namespace caylab {

int base3_rightmost(long long m) {
    if (m < 1) throw parse_error("base3_rightmost needs m >= 1");
    while (m % 3 == 0) m /= 3;
    return int(m % 3);
}

long long derangement_count(int n) {
    if (n < 1 || n > 20) throw parse_error("derangement_count supports 1 <= n <= 20");
    if (n == 1) return 0;
    long long prev2 = 0, prev1 = 1; // d_1, d_2
    for (int k = 3; k <= n; ++k) {
        long long cur = (k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

// ---------------------------------------------------------------------------

SubsetWitness dihedrant_matching(int d) {
    if (d < 0 || d > 9) throw parse_error("dihedrant_matching supports 0 <= d <= 9");
    long long n = 1;
    for (int i = 0; i < d; ++i) n *= 3;
    FiniteGroup grp = group_make("dihedral:" + std::to_string(n));

    // reflections a^{3^i} b, i = 0..d (i = d wraps to b itself)
    std::vector<int> conn;
    long long pw = 1;
    for (int i = 0; i <= d; ++i) {
        conn.push_back(grp.index_of_key(uint64_t(2 * (pw % n) + 1)));
        if (i < d) pw *= 3;
    }
    Graph g = cayley_graph(grp, connection_set(grp, conn),
                           "dihedrant_d" + std::to_string(d));

    std::vector<int> set;
    set.push_back(grp.index_of_key(0)); // identity
    set.push_back(grp.index_of_key(1)); // b
    for (long long i = 1; i < n; ++i) {
        int digit = base3_rightmost(i);
        if (digit == 1) set.push_back(grp.index_of_key(uint64_t(2 * i)));
        if (digit == 2) set.push_back(grp.index_of_key(uint64_t(2 * i + 1)));
    }
    assert((long long)set.size() == n + 1);
    return {g, make_set_certificate(g, CertKind::MatchingSet, 1, std::move(set))};
}

namespace {

int perm_parity(const std::vector<int>& p) {
    int n = int(p.size()), cycles = 0;
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
    }
    return (n - cycles) & 1; // 0 = even
}

std::vector<int> transposition(int n, int a, int b) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[a], p[b]);
    return p;
}

} // namespace

SubsetWitness star_graph_subset(int n) {
    if (n < 2 || n > 8) throw parse_error("star_graph_subset supports 2 <= n <= 8");
    FiniteGroup grp = group_make("symmetric:" + std::to_string(n));
    std::vector<int> conn;
    for (int i = 1; i < n; ++i) conn.push_back(grp.index_of_perm(transposition(n, 0, i)));
    Graph g = cayley_graph(grp, connection_set(grp, conn), "star_n" + std::to_string(n));

    // classify by support size away from the first point, and by parity
    std::vector<int> set;
    for (int idx = 0; idx < grp.order(); ++idx) {
        const std::vector<int>& p = grp.perm_of(idx);
        int s = 0;
        for (int i = 1; i < n; ++i)
            if (p[i] != i) ++s;
        bool even = perm_parity(p) == 0;
        bool in_k = (s == n - 1 && even) || (s == n - 2 && !even) || (s < n - 2 && !even);
        if ((n & 1) ? in_k : !in_k) set.push_back(idx);
    }
    assert(2 * (long long)set.size() == (long long)grp.order() + 2);
    return {g, make_set_certificate(g, CertKind::MatchingSet, 1, std::move(set))};
}

SubsetWitness tight_matching(int m) {
    if (m < 1 || m > 3) throw parse_error("tight_matching supports 1 <= m <= 3");
    int q = 2 * m + 1;
    bool odd_m = m & 1;
    FiniteGroup grp =
        group_make((odd_m ? "symmetric:" : "alternating:") + std::to_string(q));

    std::vector<int> conn;
    for (int k = m + 1; k <= q; ++k) {
        std::vector<int> c(q);
        for (int i = 1; i <= q; ++i) {
            int v;
            if (i < k - m) v = i + m;
            else if (i <= m) v = i + m + 1;
            else if (i < k) v = i - m;
            else if (i == k) v = i;
            else v = i - m - 1;
            c[i - 1] = v - 1;
        }
        // each generator is an involution fixing k
        assert(c[k - 1] == k - 1);
        for (int i = 0; i < q; ++i) assert(c[c[i]] == i);
        int idx = grp.index_of_perm(c);
        if (idx < 0) throw parse_error("tight_matching generator escapes the group");
        conn.push_back(idx);
    }
    Graph g = cayley_graph(grp, connection_set(grp, conn), "tight_m" + std::to_string(m));

    std::vector<int> set;
    for (int idx = 0; idx < grp.order(); ++idx)
        if (grp.perm_of(idx)[0] >= m) set.push_back(idx);
    assert((long long)set.size() * (2 * m + 1) == (long long)(m + 1) * grp.order());
    return {g, make_set_certificate(g, CertKind::MatchingSet, 1, std::move(set))};
}

// ---------------------------------------------------------------------------

int ArcFamily::r() const {
    int best = 0;
    for (const Bitset& s : sets) best = std::max(best, s.count());
    return best;
}

int ArcFamily::t() const {
    int f = int(sets.size());
    if (f > 20) throw parse_error("ArcFamily::t brute force capped at 20 members");
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << f); ++mask) {
        bool ok = true;
        for (int i = 0; i < f && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            Bitset priv = sets[i];
            for (int j = 0; j < f; ++j)
                if (j != i && (mask >> j & 1)) priv.and_not(sets[j]);
            ok = priv.first_set() >= 0;
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace {

bool is_subset(const Bitset& a, const Bitset& b) { return a.count_and(b) == a.count(); }

} // namespace

LatticeModel LatticeModel::boolean_lattice(int n) {
    if (n < 0 || n > 14) throw parse_error("boolean_lattice supports 0 <= n <= 14");
    LatticeModel L;
    L.ground = n;
    L.members.reserve(size_t(1) << n);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        Bitset s(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.set(i);
        L.members.push_back(std::move(s));
    }
    for (uint32_t mask = 0; mask < (1u << n); ++mask)
        for (int i = 0; i < n; ++i)
            if (!(mask >> i & 1)) L.covers.push_back({int(mask), int(mask | (1u << i))});
    return L;
}

LatticeModel LatticeModel::from_members(int ground, std::vector<Bitset> members) {
    LatticeModel L;
    L.ground = ground;
    L.members = std::move(members);
    int m = int(L.members.size());
    if (m == 0) throw parse_error("lattice needs at least one member");

    std::map<std::vector<uint64_t>, int> index;
    for (int i = 0; i < m; ++i) {
        if (L.members[i].size() != ground) throw parse_error("lattice member has wrong width");
        if (!index.emplace(L.members[i].words(), i).second)
            throw parse_error("duplicate lattice member");
    }
    Bitset full(ground);
    for (int i = 0; i < ground; ++i) full.set(i);
    if (index.find(Bitset(ground).words()) == index.end() ||
        index.find(full.words()) == index.end())
        throw parse_error("lattice must contain the empty and the full set");

    // covers: inclusion pairs one ambient element apart
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (L.members[j].count() == L.members[i].count() + 1 &&
                is_subset(L.members[i], L.members[j]))
                L.covers.push_back({i, j});

    if (m <= 5000) {
        // the one-element cover steps must generate the whole inclusion order,
        // and every pair must have a least upper bound among the members
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            int ca = L.members[a].count(), cb = L.members[b].count();
            return ca != cb ? ca < cb : a < b;
        });
        std::vector<Bitset> reach(m, Bitset(m)); // reach[i] = members above i
        for (int i = 0; i < m; ++i) reach[i].set(i);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            for (auto& [lo, hi] : L.covers)
                if (lo == *it) reach[lo] |= reach[hi];
        }
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (i != j && is_subset(L.members[i], L.members[j]) && !reach[i].test(j))
                    throw parse_error("inclusion not generated by one-element covers");
        for (int a = 0; a < m; ++a)
            for (int b = a; b < m; ++b) {
                Bitset u = L.members[a];
                u |= L.members[b];
                int lub = -1;
                for (int c : order)
                    if (is_subset(u, L.members[c])) {
                        lub = c;
                        break;
                    }
                if (lub < 0) throw parse_error("join missing");
                if (m <= 2000) { // least upper bound must lie below every upper bound
                    for (int z = 0; z < m; ++z)
                        if (is_subset(u, L.members[z]) && !is_subset(L.members[lub], L.members[z]))
                            throw parse_error("join not unique");
                }
            }
    }
    return L;
}

Graph LatticeModel::cover_graph() const {
    std::vector<std::pair<int, int>> edges(covers.begin(), covers.end());
    return Graph::from_edges(int(members.size()), edges,
                             {}, "cover_graph_n" + std::to_string(members.size()));
}

int LatticeModel::find(const Bitset& s) const {
    for (int i = 0; i < int(members.size()); ++i)
        if (members[i] == s) return i;
    return -1;
}

int LatticeModel::join(int a, int b) const {
    Bitset u = members[a];
    u |= members[b];
    int best = -1;
    for (int c = 0; c < int(members.size()); ++c) {
        if (!is_subset(u, members[c])) continue;
        if (best < 0 || members[c].count() < members[best].count()) best = c;
    }
    return best;
}

LatticeSubsetReport lattice_subset(const LatticeModel& model, const ArcFamily& fam) {
    int m = int(model.members.size());
    std::vector<int> fidx;
    for (const Bitset& f : fam.sets) {
        int i = model.find(f);
        if (i < 0) throw parse_error("arc family member outside the lattice");
        fidx.push_back(i);
    }

    std::vector<char> up(m, 0);
    for (int y = 0; y < m; ++y)
        for (const Bitset& f : fam.sets)
            if (is_subset(f, model.members[y])) {
                up[y] = 1;
                break;
            }
    std::vector<int> x, comp;
    for (int y = 0; y < m; ++y) {
        bool odd_rank = model.members[y].count() & 1;
        // x: even ranks inside the up-set, odd ranks outside
        (bool(up[y]) == odd_rank ? comp : x).push_back(y);
    }

    LatticeSubsetReport rep;
    rep.r = fam.r();
    rep.t = fam.t();
    rep.k = std::max(rep.r, rep.t);
    rep.x_size = (long long)x.size();
    std::vector<int> chosen = x.size() >= comp.size() ? x : comp;
    rep.imbalance = 2 * (long long)chosen.size() - m;

    Graph g = model.cover_graph();
    if (g.is_regular() && !fam.sets.empty()) {
        // signed count of the up-set of the union, expanded over joins
        long long est = 0;
        int f = int(fidx.size());
        for (uint32_t mask = 1; mask < (1u << f); ++mask) {
            int j = -1;
            for (int i = 0; i < f; ++i)
                if (mask >> i & 1) j = j < 0 ? fidx[i] : model.join(j, fidx[i]);
            if (j < 0) throw parse_error("join missing during estimate");
            long long term = 0;
            for (int y = 0; y < m; ++y)
                if (is_subset(model.members[j], model.members[y]))
                    term += (model.members[y].count() & 1) ? -1 : 1;
            est += (__builtin_popcount(mask) & 1) ? term : -term;
        }
        rep.ie_estimate = est;
    }
    rep.cert = make_set_certificate(g, CertKind::LowDegreeSet, rep.k, std::move(chosen));
    return rep;
}

ArcFamily cfgs_family(int d) {
    int s = int(std::ceil(std::sqrt(double(d))));
    while (s * s < d) ++s;
    while (s > 1 && (s - 1) * (s - 1) >= d) --s;
    ArcFamily fam;
    for (int lo = 0; lo < d; lo += s) {
        Bitset b(d);
        for (int i = lo; i < std::min(lo + s, d); ++i) b.set(i);
        fam.sets.push_back(std::move(b));
    }
    return fam;
}

SubsetWitness cfgs_subset(int d) {
    if (d < 1 || d > 14) throw parse_error("cfgs_subset supports 1 <= d <= 14");
    LatticeModel L = LatticeModel::boolean_lattice(d);
    LatticeSubsetReport rep = lattice_subset(L, cfgs_family(d));
    Graph g = hypercube(d);
    if (g.fingerprint() != rep.cert.graph_fingerprint)
        throw parse_error("cover graph of the boolean lattice must be the hypercube");
    assert(rep.cert.size >= (1LL << (d - 1)) + 1);
    return {std::move(g), std::move(rep.cert)};
}

// ---------------------------------------------------------------------------

namespace {

// degree <= 1 set with more than half the vertices of C_len, len even >= 6:
// pairs {3t, 3t+1}, plus the penultimate vertex when the tail leaves room
std::vector<char> cycle_matched_set(int len) {
    std::vector<char> in(len, 0);
    for (int t = 0; 3 * t + 1 <= len - 2; ++t) in[3 * t] = in[3 * t + 1] = 1;
    if (len % 3 == 2) in[len - 2] = 1;
    return in;
}

// proper cyclic 3-coloring of C_len by {a, b, x} with at least one x and the
// two neighbors of every x colored differently; lexicographically minimal
bool color_cycle(int len, int pos, std::string& c) {
    auto ok_at = [&](int i) {
        int prev = (i + len - 1) % len, next = (i + 1) % len;
        if (c[prev] != '?' && c[prev] == c[i]) return false;
        if (c[next] != '?' && c[next] == c[i]) return false;
        if (c[i] == 'x') {
            if (c[prev] != '?' && c[next] != '?' && c[prev] == c[next]) return false;
        }
        for (int v : {prev, next})
            if (c[v] == 'x') {
                int p2 = (v + len - 1) % len, n2 = (v + 1) % len;
                if (c[p2] != '?' && c[n2] != '?' && c[p2] == c[n2]) return false;
            }
        return true;
    };
    if (pos == len) return c.find('x') != std::string::npos;
    for (char ch : {'a', 'b', 'x'}) {
        c[pos] = ch;
        if (ok_at(pos) && color_cycle(len, pos + 1, c)) return true;
    }
    c[pos] = '?';
    return false;
}

std::string cycle_coloring(int len) {
    if (len % 3 == 0) {
        std::string c;
        for (int i = 0; i < len / 3; ++i) c += "xab";
        return c;
    }
    std::string c(len, '?');
    if (!color_cycle(len, 0, c)) throw parse_error("no cycle coloring found");
    return c;
}

} // namespace

SubsetWitness torus_subset(int i, int j) {
    if (i < 4 || j < 4 || i % 2 || j % 2)
        throw parse_error("torus_subset needs even i, j >= 4");
    Graph g = cartesian_product(cycle_graph(i), cycle_graph(j));
    g.name = "torus_" + std::to_string(i) + "x" + std::to_string(j);
    std::vector<int> set;

    if (i == 4 && j == 4) {
        // C_4 x C_4 is Q_4 under the reflected binary code on each factor
        static const int gray[4] = {0, 1, 3, 2};
        SubsetWitness q4 = cfgs_subset(4);
        std::vector<char> want(16, 0);
        for (int v : q4.cert.verts) want[v] = 1;
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v)
                if (want[gray[u] | (gray[v] << 2)]) set.push_back(u * 4 + v);
    } else {
        bool swap_roles = i < 6; // the paired factor needs length >= 6
        int len_pair = swap_roles ? j : i;   // carries the degree <= 1 set
        int len_col = swap_roles ? i : j;    // carries the 3-coloring
        std::vector<char> matched = cycle_matched_set(len_pair);
        std::string col = cycle_coloring(len_col);
        for (int u = 0; u < i; ++u)
            for (int v = 0; v < j; ++v) {
                int p = swap_roles ? v : u, c = swap_roles ? u : v;
                bool in = col[c] == 'x'   ? bool(matched[p])
                          : col[c] == 'a' ? p % 2 == 0
                                          : p % 2 == 1;
                if (in) set.push_back(u * j + v);
            }
    }
    assert(2 * (long long)set.size() > (long long)i * j);
    return {g, make_set_certificate(g, CertKind::LowDegreeSet, 2, std::move(set))};
}

// ---------------------------------------------------------------------------

Z3rWitness z3r_subset(int r) {
    if (r < 1 || r > 9) throw parse_error("z3r_subset supports 1 <= r <= 9");
    FiniteGroup grp = group_make("elementary:3^" + std::to_string(r));
    std::vector<int> conn;
    uint64_t pw = 1;
    for (int t = 0; t < r; ++t) {
        conn.push_back(grp.index_of_key(pw));
        conn.push_back(grp.index_of_key(2 * pw));
        pw *= 3;
    }
    Graph g = cayley_graph(grp, connection_set(grp, conn), "z3r_r" + std::to_string(r));

    // keys of the degree <= 1 set and of the disjoint independent set,
    // extended one coordinate at a time
    std::vector<uint64_t> a = {0, 1}, b = {2};
    auto add_e1 = [](uint64_t k) { return k - k % 3 + (k % 3 + 1) % 3; };
    pw = 3;
    for (int t = 1; t < r; ++t) {
        std::vector<uint64_t> a2, b2;
        for (uint64_t k : a) a2.push_back(k);
        for (uint64_t k : b) {
            a2.push_back(k + pw);
            a2.push_back(k + 2 * pw);
            b2.push_back(k);
            b2.push_back(add_e1(k) + pw);
            b2.push_back(add_e1(add_e1(k)) + 2 * pw);
        }
        a = std::move(a2);
        b = std::move(b2);
        pw *= 3;
    }

    std::vector<int> av, bv;
    for (uint64_t k : a) av.push_back(grp.index_of_key(k));
    for (uint64_t k : b) bv.push_back(grp.index_of_key(k));
    long long third = 1;
    for (int t = 1; t < r; ++t) third *= 3;
    assert((long long)av.size() == third + 1 && (long long)bv.size() == third);

    Z3rWitness w;
    w.cert = make_set_certificate(g, CertKind::LowDegreeSet, 1, std::move(av));
    w.independent = make_set_certificate(g, CertKind::IndependentSet, 0, std::move(bv));
    w.graph = std::move(g);
    return w;
}

} // namespace caylab
