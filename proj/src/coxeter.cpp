#include "caylab/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "caylab/solver.hpp"

namespace caylab {

namespace {

struct FactorSpec {
    char fam;
    int n;
};

std::vector<FactorSpec> parse_descriptor(const std::string& desc) {
    std::vector<FactorSpec> out;
    for (const std::string& tok : split(desc, 'x')) {
        if (tok.size() < 2) throw parse_error("bad factor: " + tok);
        char fam = tok[0];
        int n = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (!isdigit(tok[i])) throw parse_error("bad factor: " + tok);
            n = n * 10 + (tok[i] - '0');
        }
        bool ok = (fam == 'A' && n >= 1 && n <= 6) || (fam == 'B' && n >= 2 && n <= 5) ||
                  (fam == 'D' && n >= 4 && n <= 5) || (fam == 'I' && n >= 1 && n <= 12) ||
                  (fam == 'H' && (n == 3 || n == 4)) || (fam == 'F' && n == 4) ||
                  (fam == 'E' && n == 6);
        if (!ok) throw parse_error("unsupported factor: " + tok);
        if (fam == 'I' && n == 1) fam = 'A'; // the 2-element system
        out.push_back({fam, n});
    }
    if (out.empty()) throw parse_error("empty descriptor");
    return out;
}

int factor_rank(const FactorSpec& f) { return f.fam == 'I' ? 2 : f.n; }

// Coxeter matrix of one irreducible factor, m_ii = 1
std::vector<std::vector<int>> factor_matrix(const FactorSpec& f) {
    int rk = factor_rank(f);
    std::vector<std::vector<int>> m(rk, std::vector<int>(rk, 2));
    for (int i = 0; i < rk; ++i) m[i][i] = 1;
    auto link = [&](int i, int j, int v) { m[i][j] = m[j][i] = v; };
    switch (f.fam) {
    case 'A':
        for (int i = 0; i + 1 < rk; ++i) link(i, i + 1, 3);
        break;
    case 'B': // transpositions 0..n-2 in a chain, the sign flip joins node 0
        for (int i = 0; i + 2 < rk; ++i) link(i, i + 1, 3);
        link(rk - 1, 0, 4);
        break;
    case 'D': // fork: the double flip joins node 1
        for (int i = 0; i + 2 < rk; ++i) link(i, i + 1, 3);
        link(rk - 1, 1, 3);
        break;
    case 'I':
        link(0, 1, f.n);
        break;
    case 'H':
        link(0, 1, 5);
        for (int i = 1; i + 1 < rk; ++i) link(i, i + 1, 3);
        break;
    case 'F':
        link(0, 1, 3);
        link(1, 2, 4);
        link(2, 3, 3);
        break;
    case 'E': // chain 0-2-3-4-5 with node 1 hanging off node 3
        link(0, 2, 3);
        link(2, 3, 3);
        link(3, 4, 3);
        link(4, 5, 3);
        link(1, 3, 3);
        break;
    }
    return m;
}

std::vector<int> transposition(int deg, int a, int b) {
    std::vector<int> p(deg);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[a], p[b]);
    return p;
}

// generator permutations of one factor on its natural point set
std::vector<std::vector<int>> factor_perms(const FactorSpec& f) {
    std::vector<std::vector<int>> gens;
    if (f.fam == 'A') {
        int deg = f.n + 1;
        for (int i = 0; i + 1 < deg; ++i) gens.push_back(transposition(deg, i, i + 1));
    } else if (f.fam == 'B' || f.fam == 'D') {
        // signed permutations on points 0..n-1 = +1..+n, n..2n-1 = -1..-n
        int n = f.n, deg = 2 * n;
        for (int i = 0; i + 1 < n; ++i) {
            auto p = transposition(deg, i, i + 1);
            std::swap(p[n + i], p[n + i + 1]);
            gens.push_back(p);
        }
        std::vector<int> flip(deg);
        std::iota(flip.begin(), flip.end(), 0);
        if (f.fam == 'B') {
            std::swap(flip[0], flip[n]);
        } else {
            flip[0] = n + 1;
            flip[1] = n;
            flip[n] = 1;
            flip[n + 1] = 0;
        }
        gens.push_back(flip);
    } else if (f.fam == 'I') {
        int n = f.n;
        if (n == 1) {
            gens.push_back(transposition(2, 0, 1));
        } else if (n == 2) {
            gens.push_back(transposition(4, 0, 1));
            gens.push_back(transposition(4, 2, 3));
        } else {
            std::vector<int> r1(n), r2(n);
            for (int x = 0; x < n; ++x) {
                r1[x] = (n - x) % n;
                r2[x] = (n - 1 - x) % n;
            }
            gens.push_back(r1);
            gens.push_back(r2);
        }
    } else {
        throw parse_error("factor has no combinatorial model");
    }
    return gens;
}

struct RootSystem {
    std::vector<std::vector<double>> roots;
    std::vector<std::vector<int>> gen_perms;
};

// orbit of the simple roots under the reflection representation of the matrix
RootSystem realize_roots(const std::vector<std::vector<int>>& m) {
    int rk = int(m.size());
    std::vector<std::vector<double>> bil(rk, std::vector<double>(rk));
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j) bil[i][j] = -std::cos(M_PI / m[i][j]);

    auto reflect = [&](int i, const std::vector<double>& v) {
        double c = 0;
        for (int j = 0; j < rk; ++j) c += bil[i][j] * v[j];
        std::vector<double> w = v;
        w[i] -= 2 * c;
        return w;
    };
    std::vector<std::vector<double>> roots;
    auto find = [&](const std::vector<double>& v) {
        for (size_t r = 0; r < roots.size(); ++r) {
            double d = 0;
            for (int j = 0; j < rk; ++j) d = std::max(d, std::fabs(roots[r][j] - v[j]));
            if (d < 1e-9) return int(r);
        }
        return -1;
    };
    for (int i = 0; i < rk; ++i) {
        std::vector<double> e(rk, 0.0);
        e[i] = 1.0;
        roots.push_back(e);
    }
    for (size_t q = 0; q < roots.size(); ++q) {
        if (roots.size() > 4096) throw parse_error("root orbit did not close");
        for (int i = 0; i < rk; ++i) {
            auto w = reflect(i, roots[q]);
            if (find(w) < 0) roots.push_back(w);
        }
    }
    RootSystem rs;
    rs.gen_perms.assign(rk, std::vector<int>(roots.size()));
    for (int i = 0; i < rk; ++i)
        for (size_t r = 0; r < roots.size(); ++r) {
            int img = find(reflect(i, roots[r]));
            if (img < 0) throw parse_error("root set not closed under reflection");
            rs.gen_perms[i][r] = img;
        }
    rs.roots = std::move(roots);
    for (int i = 0; i < rk; ++i)
        for (size_t r = 0; r < rs.roots.size(); ++r)
            if (rs.gen_perms[i][rs.gen_perms[i][r]] != int(r))
                throw parse_error("reflection is not an involution on roots");
    return rs;
}

std::vector<int> bfs_lengths(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<int> dist(g.order(), -1);
    dist[0] = 0;
    std::deque<int> q{0};
    while (!q.empty()) {
        int w = q.front();
        q.pop_front();
        for (int s : gens) {
            int v = g.mul(w, s);
            if (dist[v] < 0) {
                dist[v] = dist[w] + 1;
                q.push_back(v);
            }
        }
    }
    for (int d : dist)
        if (d < 0) throw parse_error("generators do not span the group");
    return dist;
}

std::vector<int> conjugation_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    std::deque<int> q;
    for (int s : gens)
        if (!in[s]) {
            in[s] = 1;
            q.push_back(s);
        }
    while (!q.empty()) {
        int t = q.front();
        q.pop_front();
        for (int s : gens) {
            int c = g.mul(g.mul(s, t), s);
            if (!in[c]) {
                in[c] = 1;
                q.push_back(c);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < g.order(); ++i)
        if (in[i]) out.push_back(i);
    return out;
}

} // namespace

int CoxeterSystem::longest_element() const {
    int best = 0;
    for (int w = 0; w < order(); ++w)
        if (lengths[w] > lengths[best]) best = w;
    return best;
}

CoxeterSystem coxeter_system(const std::string& descriptor) {
    std::vector<FactorSpec> factors = parse_descriptor(descriptor);

    CoxeterSystem sys;
    sys.type_name = descriptor;
    for (const FactorSpec& f : factors) sys.rank += factor_rank(f);
    sys.matrix.assign(sys.rank, std::vector<int>(sys.rank, 2));
    int at = 0;
    for (const FactorSpec& f : factors) {
        auto fm = factor_matrix(f);
        for (size_t i = 0; i < fm.size(); ++i)
            for (size_t j = 0; j < fm.size(); ++j) sys.matrix[at + i][at + j] = fm[i][j];
        at += int(fm.size());
    }

    RootSystem rs = realize_roots(sys.matrix);
    sys.roots = std::move(rs.roots);
    sys.generator_perms = std::move(rs.gen_perms);

    bool tits_group = factors.size() > 1;
    for (const FactorSpec& f : factors)
        if (f.fam == 'H' || f.fam == 'F' || f.fam == 'E') tits_group = true;

    std::vector<std::vector<int>> gen_perms; // concrete generator actions
    if (factors.size() == 1 && !tits_group) {
        const FactorSpec& f = factors[0];
        gen_perms = factor_perms(f);
        if (f.fam == 'A') sys.group = group_make("symmetric:" + std::to_string(f.n + 1));
        else if (f.fam == 'B') sys.group = group_make("signed:" + std::to_string(f.n));
        else if (f.fam == 'D') sys.group = group_make("even-signed:" + std::to_string(f.n));
        else
            sys.group = perm_group("coxeter:" + descriptor, gen_perms,
                                   std::vector<std::string>(gen_perms.size(), ""), {});
    } else if (factors.size() == 1) {
        // the root permutations are the concrete model
        gen_perms = sys.generator_perms;
        sys.group = perm_group("coxeter:" + descriptor, gen_perms,
                               std::vector<std::string>(sys.rank, ""), {});
    } else {
        // product: factors act on disjoint point blocks
        std::vector<std::vector<std::vector<int>>> parts;
        int deg = 0;
        for (const FactorSpec& f : factors) {
            bool tits = f.fam == 'H' || f.fam == 'F' || f.fam == 'E';
            parts.push_back(tits ? realize_roots(factor_matrix(f)).gen_perms
                                 : factor_perms(f));
            deg += int(parts.back()[0].size());
        }
        int off = 0;
        for (const auto& fp : parts) {
            int fdeg = int(fp[0].size());
            for (const auto& p : fp) {
                std::vector<int> full(deg);
                std::iota(full.begin(), full.end(), 0);
                for (int x = 0; x < fdeg; ++x) full[off + x] = off + p[x];
                gen_perms.push_back(std::move(full));
            }
            off += fdeg;
        }
        sys.group = perm_group("coxeter:" + descriptor, gen_perms,
                               std::vector<std::string>(gen_perms.size(), ""), {});
    }

    for (const auto& p : gen_perms) {
        int idx = sys.group.index_of_perm(p);
        if (idx < 0) throw parse_error("generator not found in group");
        sys.gens.push_back(idx);
    }
    sys.lengths = bfs_lengths(sys.group, sys.gens);
    sys.reflections = conjugation_closure(sys.group, sys.gens);

    // the realized roots pair up with the reflections
    if (sys.roots.size() != 2 * sys.reflections.size())
        throw parse_error("root count disagrees with reflection count");
    for (int s = 0; s < sys.rank; ++s)
        if (sys.lengths[sys.gens[s]] != 1) throw parse_error("generator of length != 1");
    return sys;
}

Graph coxeter_cayley(const CoxeterSystem& sys) {
    std::vector<int> elems = sys.gens;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (elems.size() != sys.gens.size()) throw parse_error("repeated generator");
    return cayley_graph(sys.group, connection_set(sys.group, elems), "cay_" + sys.type_name);
}

int kappa_formula(const CoxeterSystem& sys) {
    int rk = sys.rank;
    std::vector<uint32_t> nbr(rk, 0);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j)
            if (i != j && sys.matrix[i][j] >= 3) nbr[i] |= 1u << j;
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << rk); ++mask) {
        bool ind = true;
        for (int i = 0; i < rk && ind; ++i)
            if ((mask >> i & 1) && (mask & nbr[i])) ind = false;
        if (ind) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

std::vector<int> inversion_set(const CoxeterSystem& sys, int w) {
    if (w < 0 || w >= sys.order()) throw parse_error("element index out of range");
    std::vector<int> inv;
    for (int t : sys.reflections)
        if (sys.lengths[sys.group.mul(t, w)] < sys.lengths[w]) inv.push_back(t);
    return inv;
}

LatticeModel weak_order_lattice(const CoxeterSystem& sys) {
    int r = int(sys.reflections.size());
    std::vector<int> pos(sys.order(), -1);
    for (int i = 0; i < r; ++i) pos[sys.reflections[i]] = i;
    std::vector<Bitset> members;
    for (int w = 0; w < sys.order(); ++w) {
        Bitset b(r);
        for (int t : inversion_set(sys, w)) b.set(pos[t]);
        members.push_back(std::move(b));
    }
    return LatticeModel::from_members(r, std::move(members));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(g.order(), 0);
    in[0] = 1;
    std::deque<int> q{0};
    std::vector<int> out{0};
    while (!q.empty()) {
        int w = q.front();
        q.pop_front();
        for (int s : gens) {
            int v = g.mul(w, s);
            if (!in[v]) {
                in[v] = 1;
                out.push_back(v);
                q.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Splits the Cayley edges into fiber steps and quotient steps and validates
// the decomposition: a step inside a coset multiplies the subgroup coordinate
// by a J-generator, a step across cosets keeps the coordinate and projects
// onto a quotient edge.
void check_edge_partition(const CoxeterSystem& sys, const std::vector<int>& jgens,
                          const std::vector<int>& subgroup, const std::vector<int>& reps,
                          const Graph& quotient) {
    const FiniteGroup& g = sys.group;
    int n = g.order();
    std::vector<int> fiber_min(n), rep_pos(n, -1);
    for (size_t i = 0; i < reps.size(); ++i) rep_pos[reps[i]] = int(i);
    std::vector<char> in_j(n, 0);
    for (int j : subgroup) in_j[j] = 1;
    std::vector<char> is_jgen(n, 0);
    for (int j : jgens) is_jgen[j] = 1;

    for (int w = 0; w < n; ++w) {
        int best = -1;
        for (int j : subgroup) {
            int x = g.mul(j, w);
            if (best < 0 || sys.lengths[x] < sys.lengths[best]) best = x;
        }
        fiber_min[w] = best; // the ^J W coordinate of w
        if (!in_j[g.mul(w, g.inv(best))]) throw parse_error("coset decomposition escaped W_J");
        if (rep_pos[g.inv(best)] < 0) throw parse_error("fiber minimum is not an inverse rep");
    }

    long long internal = 0, cross = 0;
    for (int w = 0; w < n; ++w)
        for (int s : sys.gens) {
            int v = g.mul(w, s);
            if (v < w) continue;
            int jw = g.mul(w, g.inv(fiber_min[w]));
            int jv = g.mul(v, g.inv(fiber_min[v]));
            if (fiber_min[w] == fiber_min[v]) {
                ++internal;
                if (!is_jgen[g.mul(g.inv(jw), jv)])
                    throw parse_error("fiber edge is not a cube step");
            } else {
                ++cross;
                if (jw != jv) throw parse_error("cross edge changes the W_J part");
                int a = rep_pos[g.inv(fiber_min[w])], b = rep_pos[g.inv(fiber_min[v])];
                if (a < 0 || b < 0 || !quotient.has_edge(a, b))
                    throw parse_error("cross edge misses the quotient");
            }
        }
    long long jsz = (long long)subgroup.size();
    long long total = (long long)n * (long long)sys.gens.size() / 2;
    if (cross != jsz * quotient.m || internal + cross != total)
        throw parse_error("edge partition counts are off");
}

} // namespace

ParabolicQuotient parabolic_quotient(const CoxeterSystem& sys, const std::vector<int>& J) {
    for (int j : J)
        if (j < 0 || j >= sys.rank) throw parse_error("generator index out of range");
    std::vector<int> jgens;
    for (int j : J) jgens.push_back(sys.gens[j]);

    ParabolicQuotient q;
    q.J = J;
    std::sort(q.J.begin(), q.J.end());
    q.J.erase(std::unique(q.J.begin(), q.J.end()), q.J.end());
    if (q.J.size() != J.size()) throw parse_error("repeated generator in J");

    const FiniteGroup& g = sys.group;
    for (int w = 0; w < g.order(); ++w) {
        bool rep = true;
        for (int s : jgens)
            if (sys.lengths[g.mul(w, s)] < sys.lengths[w]) {
                rep = false;
                break;
            }
        if (rep) q.reps.push_back(w);
    }
    std::vector<int> subgroup = subgroup_closure(g, jgens);
    if ((long long)q.reps.size() * (long long)subgroup.size() != (long long)g.order())
        throw parse_error("coset count mismatch");

    std::vector<int> rep_pos(g.order(), -1);
    int maxlen = 0;
    for (size_t i = 0; i < q.reps.size(); ++i) {
        rep_pos[q.reps[i]] = int(i);
        maxlen = std::max(maxlen, sys.lengths[q.reps[i]]);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < q.reps.size(); ++i)
        for (int s : sys.gens) {
            int v = g.mul(s, q.reps[i]); // left step: fibers are left cosets
            if (rep_pos[v] > int(i)) edges.push_back({int(i), rep_pos[v]});
        }
    q.quotient_graph =
        Graph::from_edges(int(q.reps.size()), edges, {}, "quotient_" + sys.type_name);
    q.layer_sizes.assign(maxlen + 1, 0);
    for (int w : q.reps) ++q.layer_sizes[sys.lengths[w]];
    for (int i = 0; i <= maxlen; ++i)
        if (q.layer_sizes[i] != q.layer_sizes[maxlen - i])
            throw parse_error("quotient layers are not palindromic");

    if (g.order() <= 2000) check_edge_partition(sys, jgens, subgroup, q.reps, q.quotient_graph);
    return q;
}

long long iota0_quotient(const ParabolicQuotient& q) {
    long long even = 0, odd = 0;
    for (size_t i = 0; i < q.layer_sizes.size(); ++i) (i % 2 ? odd : even) += q.layer_sizes[i];
    if (q.quotient_graph.connected()) return std::llabs(even - odd);
    SolveResult r = iota(q.quotient_graph, 0);
    if (!r.feasible) throw parse_error("quotient graph has a loop?");
    return r.value;
}

CubeLikeResult is_cube_like(const CoxeterSystem& sys) {
    int rk = sys.rank;
    std::vector<uint32_t> nbr(rk, 0);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j)
            if (i != j && sys.matrix[i][j] >= 3) nbr[i] |= 1u << j;

    std::vector<std::vector<int>> candidates;
    for (uint32_t mask = 1; mask < (1u << rk); ++mask) {
        bool ind = true;
        uint32_t dominated = mask;
        for (int i = 0; i < rk; ++i)
            if (mask >> i & 1) {
                if (mask & nbr[i]) ind = false;
                dominated |= nbr[i];
            }
        if (!ind || dominated != (1u << rk) - 1) continue; // not maximal independent
        std::vector<int> J;
        for (int i = 0; i < rk; ++i)
            if (mask >> i & 1) J.push_back(i);
        candidates.push_back(std::move(J));
    }
    std::sort(candidates.begin(), candidates.end());

    int kappa = kappa_formula(sys);
    int cube_k = int(std::ceil(std::sqrt(double(kappa))));
    long long r = (long long)sys.reflections.size();

    CubeLikeResult res;
    for (const std::vector<int>& J : candidates) {
        std::ostringstream name;
        name << "J={";
        for (size_t i = 0; i < J.size(); ++i) name << (i ? "," : "") << J[i];
        name << "}";
        int jk = int(std::ceil(std::sqrt(double(J.size()))));
        if (jk != cube_k) {
            res.log.push_back(name.str() + ": cube dimension " + std::to_string(jk) +
                              " != " + std::to_string(cube_k));
            continue;
        }
        if ((r - (long long)J.size()) % 2) {
            res.log.push_back(name.str() + ": odd reflection defect");
            continue;
        }
        ParabolicQuotient q = parabolic_quotient(sys, J);
        long long imb = iota0_quotient(q);
        if (imb > 0) {
            res.cube_like = true;
            res.witness = J;
            return res;
        }
        res.log.push_back(name.str() + ": balanced quotient");
    }
    return res;
}

Certificate cube_like_subset(const CoxeterSystem& sys, const std::vector<int>& J) {
    int d = int(J.size());
    if (d == 0 || d > 14) throw parse_error("witness J must have 1..14 generators");
    const FiniteGroup& g = sys.group;

    // the abelian parabolic is a |J|-cube
    std::vector<int> jelem(size_t(1) << d, 0);
    for (uint32_t t = 1; t < (1u << d); ++t) {
        int low = __builtin_ctz(t);
        jelem[t] = g.mul(jelem[t ^ (1u << low)], sys.gens[J[low]]);
    }
    {
        std::vector<int> sorted = jelem;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error("J does not generate a cube");
    }

    // cube side: the block-family partition of Q_d
    LatticeSubsetReport rep = lattice_subset(LatticeModel::boolean_lattice(d), cfgs_family(d));
    std::vector<char> in_a(size_t(1) << d, 0);
    for (int v : rep.cert.verts) in_a[v] = 1;

    // quotient side: length parity classes, larger first
    ParabolicQuotient q = parabolic_quotient(sys, J);
    long long even = 0, odd = 0;
    for (size_t i = 0; i < q.layer_sizes.size(); ++i) (i % 2 ? odd : even) += q.layer_sizes[i];
    int want_parity = even >= odd ? 0 : 1;

    std::vector<int> set;
    for (int w : q.reps) {
        bool in_ap = sys.lengths[w] % 2 == want_parity;
        int u = g.inv(w);
        for (uint32_t t = 0; t < (1u << d); ++t)
            if (bool(in_a[t]) == in_ap) set.push_back(g.mul(jelem[t], u));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw parse_error("coset decomposition produced duplicates");
    if (2 * (long long)set.size() < (long long)g.order() + 2)
        throw parse_error("subset is not past half");

    int k = int(std::ceil(std::sqrt(double(d))));
    return make_set_certificate(coxeter_cayley(sys), CertKind::LowDegreeSet, k, std::move(set));
}

Certificate bn_dn_subset(char family, int n) {
    if (family == 'B' ? (n < 3 || n > 5) : (family != 'D' || n < 4 || n > 5))
        throw parse_error("bn_dn_subset supports B 3..5 and D 4..5");
    CoxeterSystem sys = coxeter_system(std::string(1, family) + std::to_string(n));
    CoxeterSystem asys = coxeter_system("A" + std::to_string(n - 1));
    CubeLikeResult wit = is_cube_like(asys);
    if (!wit.cube_like) throw parse_error("symmetric factor is not cube-like");
    Certificate inner = cube_like_subset(asys, wit.witness);

    std::vector<int> set;
    for (int v : inner.verts) {
        SignedPermElement e{0u, asys.group.perm_of(v)};
        int idx = signed_encode(sys.group, e);
        if (idx < 0) throw parse_error("plain permutation missing from signed group");
        set.push_back(idx);
    }
    long long k_size = (long long)set.size();

    auto parity = [](const std::vector<int>& p) {
        int n2 = int(p.size()), c = 0;
        std::vector<char> seen(n2, 0);
        for (int i = 0; i < n2; ++i) {
            if (seen[i]) continue;
            ++c;
            for (int j = i; !seen[j]; j = p[j]) seen[j] = 1;
        }
        return (n2 - c) & 1;
    };
    for (int idx = 0; idx < sys.order(); ++idx) {
        SignedPermElement e = signed_decode(sys.group, idx);
        if (e.flips == 0) continue;
        if ((__builtin_popcount(e.flips) & 1) != parity(e.p)) set.push_back(idx);
    }
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if ((long long)set.size() != k_size + (sys.order() - fact) / 2)
        throw parse_error("parity-mismatch class has the wrong size");

    int k = 1;
    while (k * k < (n - 1 + 1) / 2) ++k; // ceil(sqrt(ceil((n-1)/2)))
    return make_set_certificate(coxeter_cayley(sys), CertKind::LowDegreeSet, k + 1,
                                std::move(set));
}

} // namespace caylab
