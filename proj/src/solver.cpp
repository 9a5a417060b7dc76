#include "caylab/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace caylab {

namespace {

using clock_type = std::chrono::steady_clock;

struct Deadline {
    long long max_nodes;
    clock_type::time_point t0;
    double max_seconds;
    long long nodes = 0;
    bool hit = false;

    explicit Deadline(const Budget& b)
        : max_nodes(b.max_nodes), t0(clock_type::now()), max_seconds(b.max_seconds) {}

    // returns true while within budget
    bool tick() {
        if (hit) return false;
        ++nodes;
        if (max_nodes > 0 && nodes > max_nodes) { hit = true; return false; }
        if (max_seconds > 0 && (nodes & 1023) == 0 && elapsed() > max_seconds) {
            hit = true;
            return false;
        }
        return true;
    }

    double elapsed() const {
        return std::chrono::duration<double>(clock_type::now() - t0).count();
    }
};

// ---------------------------------------------------------------------------
// max_low_degree_set
// ---------------------------------------------------------------------------

struct LowDegreeSearch {
    const Graph& g;
    int k;
    long long target; // -1: none
    Deadline dl;

    enum : uint8_t { UND = 0, IN = 1, OUT = 2 };
    std::vector<uint8_t> status;
    std::vector<int> in_deg; // neighbours currently IN
    Bitset in_mask, und_mask;
    int cnt_in = 0;

    long long best = -1;
    std::vector<int> best_set;
    long long abort_ub = -1;
    bool target_hit = false;

    LowDegreeSearch(const Graph& g_, int k_, const Budget& b, long long target_)
        : g(g_), k(k_), target(target_), dl(b),
          status(g_.n, UND), in_deg(g_.n, 0), in_mask(g_.n), und_mask(g_.n) {
        for (int v = 0; v < g.n; ++v) und_mask.set(v);
    }

    bool vertex_ok(int u) const {
        // u could still join the set: own induced degree fits and no IN
        // neighbour is already saturated
        if (in_deg[u] + 2 * g.loop[u] > k) return false;
        for (int v : g.nbr[u])
            if (status[v] == IN && in_deg[v] >= k) return false;
        return true;
    }

    void set_out(int u, std::vector<int>& trail) {
        status[u] = OUT;
        und_mask.reset(u);
        trail.push_back(u);
    }

    // include u (assumed vertex_ok); marks newly impossible vertices OUT
    void include(int u, std::vector<int>& trail) {
        status[u] = IN;
        und_mask.reset(u);
        in_mask.set(u);
        ++cnt_in;
        trail.push_back(~u); // ~u marks an inclusion on the trail
        for (int w : g.nbr[u]) ++in_deg[w];
        for (int w : g.nbr[u]) {
            if (status[w] == UND && !vertex_ok(w)) set_out(w, trail);
            if (status[w] == IN && in_deg[w] == k) {
                // w just saturated: its undecided neighbours are dead
                for (int x : g.nbr[w])
                    if (status[x] == UND && !vertex_ok(x)) set_out(x, trail);
            }
        }
    }

    void unwind(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            int t = trail.back();
            trail.pop_back();
            if (t >= 0) {
                status[t] = UND;
                und_mask.set(t);
            } else {
                int u = ~t;
                status[u] = UND;
                und_mask.set(u);
                in_mask.reset(u);
                --cnt_in;
                for (int w : g.nbr[u]) --in_deg[w];
            }
        }
    }

    // upper bound on the best completion of the current node.  Degree-sum
    // argument: any completion keeps IN and deletes some undecided vertices;
    // each surviving edge costs degree budget k per endpoint.
    long long upper_bound(const std::vector<int>& und) {
        long long full = cnt_in + (long long)und.size();
        if (k >= 0 && !und.empty()) {
            Bitset h = in_mask;
            for (int u : und) h.set(u);
            long long deg_total = 0;
            std::vector<int> und_deg;
            und_deg.reserve(und.size());
            for (int v = 0; v < g.n; ++v) {
                if (!h.test(v)) continue;
                int d = (int)g.adj[v].count_and(h) + 2 * g.loop[v];
                deg_total += d;
                if (status[v] == UND) und_deg.push_back(d);
            }
            long long edges = deg_total / 2;
            std::sort(und_deg.rbegin(), und_deg.rend());
            long long removed = 0;
            long long bound = cnt_in;
            for (size_t del = 0; del <= und_deg.size(); ++del) {
                long long t = full - (long long)del;
                if (t < cnt_in) break;
                long long e_min = std::max<long long>(0, edges - removed);
                if (2 * e_min <= (long long)k * t) { bound = t; break; }
                if (del < und_deg.size()) removed += und_deg[del];
            }
            full = bound;
        }
        if (k == 0) {
            // greedy clique cover: each clique contributes at most one vertex
            Bitset free_m = und_mask;
            long long cliques = 0;
            for (int u = free_m.first_set(); u >= 0; u = free_m.first_set()) {
                free_m.reset(u);
                Bitset cand = g.adj[u];
                cand &= free_m;
                for (int w = cand.first_set(); w >= 0; w = cand.first_set()) {
                    free_m.reset(w);
                    cand.reset(w);
                    cand &= g.adj[w];
                }
                ++cliques;
            }
            full = std::min(full, cnt_in + cliques);
        }
        return full;
    }

    void record_if_better() {
        if (cnt_in > best) {
            best = cnt_in;
            best_set.clear();
            for (int v = 0; v < g.n; ++v)
                if (status[v] == IN) best_set.push_back(v);
            if (target >= 0 && best >= target) target_hit = true;
        }
    }

    void dfs() {
        if (!dl.tick()) {
            long long und = (long long)und_mask.count();
            abort_ub = std::max(abort_ub, cnt_in + und);
            return;
        }
        record_if_better();
        if (target_hit) return;

        std::vector<int> und;
        std::vector<int> dead;
        und_mask.for_each([&](int v) {
            if (vertex_ok(v)) und.push_back(v); else dead.push_back(v);
        });
        std::vector<int> trail;
        for (int v : dead) set_out(v, trail);

        if (und.empty()) {
            unwind(trail, 0);
            return;
        }
        long long ub = upper_bound(und);
        if (ub <= best) {
            unwind(trail, 0);
            return;
        }

        // branch on the busiest undecided vertex
        Bitset h = in_mask;
        for (int u : und) h.set(u);
        int pick = und[0], pick_deg = -1;
        for (int u : und) {
            int d = (int)g.adj[u].count_and(h);
            if (d > pick_deg) { pick = u; pick_deg = d; }
        }

        size_t mark = trail.size();
        include(pick, trail);
        dfs();
        unwind(trail, mark);
        if (!target_hit && !dl.hit) {
            set_out(pick, trail);
            dfs();
        } else if (dl.hit) {
            long long und_left = (long long)und_mask.count();
            abort_ub = std::max(abort_ub, cnt_in + und_left);
        }
        unwind(trail, 0);
    }

    void greedy_seed() {
        std::vector<int> order(g.n);
        for (int i = 0; i < g.n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.nbr[a].size() < g.nbr[b].size(); });
        std::vector<uint8_t> in(g.n, 0);
        std::vector<int> deg(g.n, 0);
        std::vector<int> set;
        for (int u : order) {
            if (deg[u] + 2 * g.loop[u] > k) continue;
            bool ok = true;
            for (int v : g.nbr[u])
                if (in[v] && deg[v] >= k) { ok = false; break; }
            if (!ok) continue;
            in[u] = 1;
            set.push_back(u);
            for (int v : g.nbr[u]) ++deg[v];
        }
        best = (long long)set.size();
        std::sort(set.begin(), set.end());
        best_set = std::move(set);
        if (target >= 0 && best >= target) target_hit = true;
    }

    SolveResult run() {
        SolveResult r;
        greedy_seed();
        if (!target_hit) {
            std::vector<int> trail;
            if (g.vertex_transitive && g.n > 0 && status[0] == UND && vertex_ok(0)) {
                // some optimum contains vertex 0, so never branch on excluding it
                include(0, trail);
            }
            dfs();
            unwind(trail, 0);
        }
        r.nodes = dl.nodes;
        r.seconds = dl.elapsed();
        r.value = best;
        if (target_hit) {
            r.status = SolveStatus::Lower;
            r.value_hi = g.n;
        } else if (dl.hit) {
            r.status = SolveStatus::Interval;
            r.value_hi = std::max(best, abort_ub);
        } else {
            r.status = SolveStatus::Exact;
            r.value_hi = best;
        }
        if (!best_set.empty() || best == 0) {
            CertKind kind = k == 0 ? CertKind::IndependentSet : CertKind::LowDegreeSet;
            r.witness = make_set_certificate(g, kind, k, best_set);
        }
        return r;
    }
};

// ---------------------------------------------------------------------------
// iota
// ---------------------------------------------------------------------------

struct IotaSearch {
    const Graph& g;
    int k;
    Deadline dl;

    enum : uint8_t { UND = 0, SIDE_A = 1, SIDE_B = 2 };
    std::vector<uint8_t> side;
    std::vector<int> deg_a, deg_b;
    int cnt_a = 0, cnt_b = 0, cnt_und;

    long long best = 0;
    bool found = false;
    std::vector<int> best_a, best_b;
    long long abort_ub;

    IotaSearch(const Graph& g_, int k_, const Budget& b)
        : g(g_), k(k_), dl(b), side(g_.n, UND), deg_a(g_.n, 0), deg_b(g_.n, 0),
          cnt_und(g_.n), abort_ub(-(long long)g_.n - 1) {}

    bool can_join(int u, uint8_t s) const {
        const std::vector<int>& deg = (s == SIDE_A) ? deg_a : deg_b;
        if (deg[u] + 2 * g.loop[u] > k) return false;
        for (int v : g.nbr[u])
            if (side[v] == s && deg[v] >= k) return false;
        return true;
    }

    // assign u to side s and propagate forced moves; returns false on a
    // contradiction (some vertex can join neither side)
    bool assign(int u, uint8_t s, std::vector<std::pair<int, uint8_t>>& trail) {
        std::vector<std::pair<int, uint8_t>> queue{{u, s}};
        while (!queue.empty()) {
            auto [v, sv] = queue.back();
            queue.pop_back();
            if (side[v] != UND) {
                if (side[v] != sv) return false;
                continue;
            }
            if (!can_join(v, sv)) return false;
            side[v] = sv;
            --cnt_und;
            (sv == SIDE_A ? cnt_a : cnt_b)++;
            trail.push_back({v, sv});
            std::vector<int>& deg = (sv == SIDE_A) ? deg_a : deg_b;
            for (int w : g.nbr[v]) ++deg[w];
            // vertices whose options may have shrunk: neighbours of v and
            // neighbours of newly saturated same-side vertices
            std::vector<int> affected(g.nbr[v]);
            for (int w : g.nbr[v])
                if (side[w] == sv && deg[w] == k)
                    affected.insert(affected.end(), g.nbr[w].begin(), g.nbr[w].end());
            for (int w : affected) {
                if (side[w] != UND) continue;
                bool a_ok = can_join(w, SIDE_A), b_ok = can_join(w, SIDE_B);
                if (!a_ok && !b_ok) return false;
                if (a_ok != b_ok) queue.push_back({w, a_ok ? SIDE_A : SIDE_B});
            }
        }
        return true;
    }

    void unwind(std::vector<std::pair<int, uint8_t>>& trail, size_t mark) {
        while (trail.size() > mark) {
            auto [v, sv] = trail.back();
            trail.pop_back();
            side[v] = UND;
            ++cnt_und;
            (sv == SIDE_A ? cnt_a : cnt_b)--;
            std::vector<int>& deg = (sv == SIDE_A) ? deg_a : deg_b;
            for (int w : g.nbr[v]) --deg[w];
        }
    }

    void record() {
        long long diff = cnt_a - cnt_b;
        if (!found || diff > best) {
            found = true;
            best = diff;
            best_a.clear();
            best_b.clear();
            for (int v = 0; v < g.n; ++v)
                (side[v] == SIDE_A ? best_a : best_b).push_back(v);
        }
    }

    void dfs() {
        if (!dl.tick()) {
            abort_ub = std::max(abort_ub, (long long)(cnt_a - cnt_b + cnt_und));
            return;
        }
        if (cnt_und == 0) {
            record();
            return;
        }
        long long ub = cnt_a - cnt_b;
        int pick = -1, pick_deg = -1;
        for (int v = 0; v < g.n; ++v) {
            if (side[v] != UND) continue;
            ub += can_join(v, SIDE_A) ? 1 : -1;
            int d = (int)g.nbr[v].size();
            if (d > pick_deg) { pick = v; pick_deg = d; }
        }
        if (found && ub <= best) return;

        for (uint8_t s : {SIDE_A, SIDE_B}) {
            if (!can_join(pick, s)) continue;
            std::vector<std::pair<int, uint8_t>> trail;
            if (assign(pick, s, trail)) dfs();
            unwind(trail, 0);
            if (dl.hit) {
                abort_ub = std::max(abort_ub, (long long)(cnt_a - cnt_b + cnt_und));
                return;
            }
        }
    }

    SolveResult run() {
        SolveResult r;
        std::vector<std::pair<int, uint8_t>> trail;
        bool root_ok = true;
        if (g.vertex_transitive && g.n > 0) {
            // an optimal partition has |A| >= |B|, hence contains some vertex
            // in A; by transitivity one of them places vertex 0 there
            root_ok = can_join(0, SIDE_A) && assign(0, SIDE_A, trail);
        }
        if (root_ok) dfs();
        unwind(trail, 0);
        r.nodes = dl.nodes;
        r.seconds = dl.elapsed();
        r.feasible = found;
        r.value = found ? best : 0;
        if (dl.hit && (!found || abort_ub > best)) {
            r.status = SolveStatus::Interval;
            r.value_hi = abort_ub;
        } else {
            r.status = SolveStatus::Exact;
            r.value_hi = r.value;
        }
        if (found)
            r.witness = make_partition_certificate(g, k, best_a, best_b);
        return r;
    }
};

// iota with k = 0: per component, the bipartition is forced up to swapping,
// so the optimum is the sum of |even - odd| class sizes
std::optional<SolveResult> iota_bipartite_shortcut(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.loop[v]) return std::nullopt;
    auto colors = g.bipartition();
    SolveResult r;
    if (!colors) {
        r.feasible = false;
        r.status = SolveStatus::Exact;
        return r;
    }
    std::vector<int> comp(g.n, -1);
    int ncomp = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.nbr[u])
                if (comp[w] < 0) { comp[w] = ncomp; stack.push_back(w); }
        }
        ++ncomp;
    }
    std::vector<std::array<long long, 2>> cls(ncomp, {0, 0});
    for (int v = 0; v < g.n; ++v) cls[comp[v]][(*colors)[v]]++;
    std::vector<int> a, b;
    long long total = 0;
    for (int v = 0; v < g.n; ++v) {
        auto& c = cls[comp[v]];
        int big = c[0] >= c[1] ? 0 : 1;
        ((*colors)[v] == big ? a : b).push_back(v);
    }
    for (int c = 0; c < ncomp; ++c) total += std::llabs(cls[c][0] - cls[c][1]);
    r.feasible = true;
    r.value = r.value_hi = total;
    r.status = SolveStatus::Exact;
    r.witness = make_partition_certificate(g, 0, a, b);
    return r;
}

// ---------------------------------------------------------------------------
// kappa
// ---------------------------------------------------------------------------

struct CubeSearch {
    const Graph& g;
    Deadline dl;
    int d = 0;
    std::vector<int> order;  // words sorted by (popcount, value)
    std::vector<int> image;  // word -> vertex
    Bitset used;
    bool ok = false;

    CubeSearch(const Graph& g_, const Budget& b) : g(g_), dl(b), used(g_.n) {}

    bool extend(size_t idx, int anchor) {
        if (!dl.tick()) return false;
        if (idx == order.size()) return true;
        int w = order[idx];
        int pc = __builtin_popcount((unsigned)w);
        Bitset cand(g.n);
        if (pc == 1) {
            cand = g.adj[image[0]];
            // direction symmetry: images of e_0 < e_1 < ... ascending
            int t = __builtin_ctz((unsigned)w);
            int lo = t > 0 ? image[1 << (t - 1)] : anchor;
            for (int v = 0; v <= lo && v < g.n; ++v) cand.reset(v);
        } else {
            bool first = true;
            for (int t = 0; t < d; ++t) {
                if (!(w >> t & 1)) continue;
                const Bitset& row = g.adj[image[w ^ (1 << t)]];
                if (first) { cand = row; first = false; }
                else cand &= row;
            }
        }
        cand.and_not(used);
        for (int v = cand.first_set(); v >= 0; v = cand.first_set()) {
            cand.reset(v);
            if (v <= anchor) continue;
            image[w] = v;
            used.set(v);
            if (extend(idx + 1, anchor)) return true;
            used.reset(v);
            if (dl.hit) return false;
        }
        return false;
    }

    // true iff the graph contains a d-cube subgraph (embedding left in `image`)
    bool probe(int dim) {
        d = dim;
        int words = 1 << d;
        order.resize(words);
        for (int w = 0; w < words; ++w) order[w] = w;
        std::sort(order.begin(), order.end(), [](int a, int b) {
            int pa = __builtin_popcount((unsigned)a), pb = __builtin_popcount((unsigned)b);
            return pa != pb ? pa < pb : a < b;
        });
        image.assign(words, -1);
        int last_anchor = g.vertex_transitive ? 0 : g.n - 1;
        for (int anchor = 0; anchor <= last_anchor; ++anchor) {
            image[0] = anchor;
            used.clear();
            used.set(anchor);
            // anchor = least vertex of the cube (cube symmetry allows it)
            if (extend(1, anchor)) return true;
            used.reset(anchor);
            if (dl.hit) return false;
        }
        return false;
    }
};

} // namespace

// ---------------------------------------------------------------------------

Budget Budget::parse(const std::string& s) {
    Budget b;
    if (s.empty() || s == "none") return b;
    if (s.size() > 5 && s.substr(s.size() - 5) == "nodes") {
        double v = std::stod(s.substr(0, s.size() - 5));
        if (v <= 0) throw parse_error("budget must be positive: " + s);
        b.max_nodes = (long long)v;
        return b;
    }
    if (s.back() == 's') {
        double v = std::stod(s.substr(0, s.size() - 1));
        if (v <= 0) throw parse_error("budget must be positive: " + s);
        b.max_seconds = v;
        return b;
    }
    throw parse_error("cannot parse budget (want e.g. 600s or 1e7nodes): " + s);
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Exact: return "exact";
        case SolveStatus::Lower: return "lower";
        case SolveStatus::Upper: return "upper";
        case SolveStatus::Interval: return "interval";
    }
    return "?";
}

SolveResult max_low_degree_set(const Graph& g, int k, const Budget& budget,
                               long long target) {
    if (k < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (g.n == 0) return {};
    LowDegreeSearch s(g, k, budget, target);
    return s.run();
}

SolveResult independence_number(const Graph& g, const Budget& budget) {
    return max_low_degree_set(g, 0, budget);
}

SolveResult sensitivity(const Graph& g, std::optional<long long> alpha_hint,
                        const Budget& budget) {
    if (g.m == 0 && g.loop_count() == 0)
        throw std::invalid_argument("sensitivity needs at least one edge");
    Deadline outer(budget);
    long long alpha;
    long long nodes = 0;
    if (alpha_hint) {
        bool structural = false;
        if (g.connected() && g.is_regular() && g.loop_count() == 0) {
            auto col = g.bipartition();
            // connected regular bipartite: both classes have n/2 vertices and
            // a maximum independent set is one class
            if (col && *alpha_hint * 2 == g.n) structural = true;
        }
        if (!structural) {
            SolveResult a = independence_number(g, budget);
            nodes += a.nodes;
            if (a.status != SolveStatus::Exact)
                throw std::runtime_error("budget too small to confirm the independence hint");
            if (a.value != *alpha_hint)
                throw std::runtime_error("independence hint " + std::to_string(*alpha_hint) +
                                         " is wrong (actual " + std::to_string(a.value) + ")");
        }
        alpha = *alpha_hint;
    } else {
        SolveResult a = independence_number(g, budget);
        nodes += a.nodes;
        if (a.status != SolveStatus::Exact) {
            SolveResult r;
            r.status = SolveStatus::Interval;
            r.value = 1;
            r.value_hi = g.max_degree();
            r.nodes = nodes;
            r.seconds = outer.elapsed();
            return r;
        }
        alpha = a.value;
    }

    int dmax = g.max_degree();
    for (int k = 1; k <= dmax; ++k) {
        Budget left = budget;
        if (left.max_seconds > 0) {
            left.max_seconds -= outer.elapsed();
            if (left.max_seconds <= 0) left.max_seconds = 1e-9;
        }
        if (left.max_nodes > 0) {
            left.max_nodes -= nodes;
            if (left.max_nodes <= 0) left.max_nodes = 1;
        }
        SolveResult step = max_low_degree_set(g, k, left, alpha + 1);
        nodes += step.nodes;
        if (step.status == SolveStatus::Lower ||
            (step.status == SolveStatus::Exact && step.value > alpha)) {
            SolveResult r;
            r.status = SolveStatus::Exact;
            r.value = r.value_hi = k;
            r.nodes = nodes;
            r.seconds = outer.elapsed();
            r.witness = step.witness;
            return r;
        }
        if (step.status != SolveStatus::Exact) {
            SolveResult r;
            r.status = SolveStatus::Interval;
            r.value = k;
            r.value_hi = dmax;
            r.nodes = nodes;
            r.seconds = outer.elapsed();
            return r;
        }
    }
    // S = V exceeds alpha whenever the graph has an edge
    SolveResult r;
    r.status = SolveStatus::Exact;
    r.value = r.value_hi = dmax;
    r.nodes = nodes;
    r.seconds = outer.elapsed();
    return r;
}

SolveResult delta_beta(const Graph& g, const Rational& beta, const Budget& budget) {
    if (beta.num <= 0 || beta.num > beta.den)
        throw std::invalid_argument("beta must lie in (0, 1]");
    Deadline outer(budget);
    long long need = beta.ceil_times(g.n);
    if (need == 0) need = 1;
    long long nodes = 0;
    int dmax = g.max_degree();
    for (int k = 0; k <= dmax; ++k) {
        Budget left = budget;
        if (left.max_seconds > 0) {
            left.max_seconds -= outer.elapsed();
            if (left.max_seconds <= 0) left.max_seconds = 1e-9;
        }
        if (left.max_nodes > 0) {
            left.max_nodes -= nodes;
            if (left.max_nodes <= 0) left.max_nodes = 1;
        }
        SolveResult step = max_low_degree_set(g, k, left, need);
        nodes += step.nodes;
        if (step.status == SolveStatus::Lower ||
            (step.status == SolveStatus::Exact && step.value >= need)) {
            SolveResult r;
            r.status = SolveStatus::Exact;
            r.value = r.value_hi = k;
            r.nodes = nodes;
            r.seconds = outer.elapsed();
            r.witness = step.witness;
            return r;
        }
        if (step.status != SolveStatus::Exact) {
            SolveResult r;
            r.status = SolveStatus::Interval;
            r.value = k;
            r.value_hi = dmax;
            r.nodes = nodes;
            r.seconds = outer.elapsed();
            return r;
        }
    }
    SolveResult r;
    r.status = SolveStatus::Exact;
    r.value = r.value_hi = dmax;
    r.nodes = nodes;
    r.seconds = outer.elapsed();
    return r;
}

SolveResult iota(const Graph& g, int k, const Budget& budget) {
    if (k < 0) throw std::invalid_argument("degree bound must be >= 0");
    if (g.n == 0) {
        SolveResult r;
        r.feasible = true;
        return r;
    }
    if (k == 0) {
        if (auto r = iota_bipartite_shortcut(g)) return *r;
    }
    IotaSearch s(g, k, budget);
    return s.run();
}

SolveResult kappa_search(const Graph& g, int d_max, const Budget& budget) {
    SolveResult r;
    if (g.n == 0) return r;

    CubeSearch s(g, budget);
    d_max = std::min(d_max, 16);
    int lo = 0;             // largest dimension found
    int hi = d_max + 1;     // smallest dimension refuted (d_max+1: untested)
    std::vector<int> best_image{-1};

    // recursive doubling, then bisection between found and refuted
    int probe_d = 1;
    while (lo + 1 < hi) {
        int d = probe_d <= lo ? (lo + hi) / 2 : std::min(probe_d, hi - 1);
        if ((1 << d) > g.n) { hi = std::min(hi, d); probe_d = d; continue; }
        bool found = s.probe(d);
        if (s.dl.hit) break;
        if (found) {
            lo = d;
            best_image = s.image;
            probe_d = d * 2;
        } else {
            hi = d;
        }
    }

    r.nodes = s.dl.nodes;
    r.seconds = s.dl.elapsed();
    r.value = lo;
    if (lo + 1 >= hi) {
        r.status = SolveStatus::Exact;
        r.value_hi = lo;
    } else if (hi <= d_max) {
        r.status = SolveStatus::Interval;
        r.value_hi = hi - 1;
    } else {
        r.status = SolveStatus::Interval;
        r.value_hi = hi - 1; // only probed up to d_max
    }
    if (lo > 0) {
        Certificate c;
        c.kind = CertKind::CubeEmbedding;
        c.graph_fingerprint = g.fingerprint();
        c.k = lo;
        c.verts = best_image;
        c.size = (long long)c.verts.size();
        r.witness = c;
    } else {
        Certificate c;
        c.kind = CertKind::CubeEmbedding;
        c.graph_fingerprint = g.fingerprint();
        c.k = 0;
        c.verts = {0};
        c.size = 1;
        r.witness = c;
    }
    return r;
}

} // namespace caylab
