#include "caylab/incidence.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace caylab {

namespace {

// reduction polynomials: x^deg = sum of lower coefficients (base-p digits)
int reduction_digits(int q) {
    switch (q) {
    case 4: return 3;  // x^2 = x + 1
    case 8: return 3;  // x^3 = x + 1
    case 9: return 2;  // x^2 = -1 = 2 (mod 3)
    default: return 0;
    }
}

} // namespace

GaloisField GaloisField::make(int q) {
    GaloisField f;
    f.q = q;
    switch (q) {
    case 2: case 3: case 5: case 7: f.p = q; f.deg = 1; break;
    case 4: f.p = 2; f.deg = 2; break;
    case 8: f.p = 2; f.deg = 3; break;
    case 9: f.p = 3; f.deg = 2; break;
    default: throw parse_error("GF(q) supported for q in {2,3,4,5,7,8,9}");
    }
    auto digits = [&](int a) {
        std::vector<int> d(f.deg);
        for (int i = 0; i < f.deg; ++i) {
            d[i] = a % f.p;
            a /= f.p;
        }
        return d;
    };
    auto pack = [&](const std::vector<int>& d) {
        int a = 0;
        for (int i = f.deg - 1; i >= 0; --i) a = a * f.p + d[i];
        return a;
    };
    std::vector<int> red = digits(reduction_digits(q));

    f.add_table.assign(q, std::vector<int>(q));
    f.mul_table.assign(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            auto da = digits(a), db = digits(b);
            std::vector<int> sum(f.deg);
            for (int i = 0; i < f.deg; ++i) sum[i] = (da[i] + db[i]) % f.p;
            f.add_table[a][b] = pack(sum);

            std::vector<int> prod(2 * f.deg - 1, 0);
            for (int i = 0; i < f.deg; ++i)
                for (int j = 0; j < f.deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p;
            for (int i = 2 * f.deg - 2; i >= f.deg; --i) {
                int c = prod[i];
                if (!c) continue;
                prod[i] = 0;
                for (int j = 0; j < f.deg; ++j)
                    prod[i - f.deg + j] = (prod[i - f.deg + j] + c * red[j]) % f.p;
            }
            prod.resize(f.deg);
            f.mul_table[a][b] = pack(prod);
        }
    return f;
}

int GaloisField::neg(int a) const {
    for (int b = 0; b < q; ++b)
        if (add(a, b) == 0) return b;
    throw parse_error("field negation failed");
}

int GaloisField::inverse(int a) const {
    for (int b = 1; b < q; ++b)
        if (mul(a, b) == 1) return b;
    throw parse_error("field inverse of zero");
}

ProjectivePlane projective_plane(int q) {
    ProjectivePlane pl;
    pl.field = GaloisField::make(q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c) {
                std::array<int, 3> v{a, b, c};
                int lead = a ? a : b ? b : c;
                if (!lead) continue;
                if (lead != 1) continue; // first nonzero coordinate normalized to 1
                pl.points.push_back(v);
            }
    assert((int)pl.points.size() == q * q + q + 1);
    return pl;
}

int ProjectivePlane::dot(int x, int y) const {
    int s = 0;
    for (int i = 0; i < 3; ++i) s = field.add(s, field.mul(points[x][i], points[y][i]));
    return s;
}

Graph polarity_graph(int q) {
    ProjectivePlane pl = projective_plane(q);
    int n = int(pl.points.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<int> loops;
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            if (pl.dot(x, y) != 0) continue;
            if (x == y) loops.push_back(x);
            else edges.push_back({x, y});
        }
    assert((int)loops.size() == q + 1);
    Graph g = Graph::from_edges(n, edges, loops, "polarity_q" + std::to_string(q));
    for (int v = 0; v < n; ++v)
        if (int(g.nbr[v].size()) + g.loop[v] != q + 1)
            throw parse_error("polarity graph row sum is off");
    return g;
}

Graph levi_graph(int q) {
    Graph g = kronecker_double_cover(polarity_graph(q));
    g.name = "levi_q" + std::to_string(q);
    return g;
}

DihedrantLevi dihedrant_levi(int q) {
    if (q < 2 || q > 8 || q == 6) throw parse_error("dihedrant_levi supports prime powers 2..8");
    int n = q * q + q + 1, k = q + 1;

    // perfect difference set: every nonzero residue is a difference exactly once
    std::vector<int> d{0, 1};
    std::vector<char> used(n, 0);
    used[1] = used[n - 1] = 1;
    auto extend = [&](auto&& self, int last) -> bool {
        if ((int)d.size() == k) return true;
        for (int cand = last + 1; cand < n; ++cand) {
            // mark incrementally so two differences of cand itself cannot
            // collapse onto the same residue unnoticed
            std::vector<int> marked;
            bool ok = true;
            for (int x : d) {
                int diff = cand - x;
                if (used[diff] || used[n - diff]) {
                    ok = false;
                    break;
                }
                used[diff] = used[n - diff] = 1;
                marked.push_back(diff);
            }
            if (ok) {
                d.push_back(cand);
                if (self(self, cand)) return true;
                d.pop_back();
            }
            for (int diff : marked) used[diff] = used[n - diff] = 0;
        }
        return false;
    };
    if (!extend(extend, 1)) throw parse_error("no difference set found");

    FiniteGroup grp = group_make("dihedral:" + std::to_string(n));
    std::vector<int> conn;
    for (int x : d) conn.push_back(grp.index_of_key(uint64_t(2 * x + 1)));
    DihedrantLevi out;
    out.difference_set = d;
    out.graph = cayley_graph(grp, connection_set(grp, conn),
                             "dihedrant_levi_q" + std::to_string(q));
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Mat {
    int a, b, c, d;
};

int legendre(int a, int q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) return 0;
    int r = 1, base = a, e = (q - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

int sqrt_minus_one(int q) {
    for (int i = 1; i < q; ++i)
        if (i * i % q == q - 1) return i;
    throw parse_error("-1 is not a square mod q");
}

} // namespace

LpsGraph lps_graph(int p, int q) {
    if (p % 4 != 1 || q % 4 != 1 || p == q || q < 5 || q > 40)
        throw parse_error("lps_graph needs distinct primes p, q = 1 mod 4 (q <= 40)");
    for (int x : {p, q})
        for (int dvr = 2; dvr * dvr <= x; ++dvr)
            if (x % dvr == 0) throw parse_error("lps_graph parameters must be prime");

    LpsGraph out;
    out.p = p;
    out.q = q;
    // a0 odd and positive, the rest even
    for (int a0 = 1; a0 * a0 <= p; a0 += 2)
        for (int a1 = 1 - p; a1 <= p; a1 += 2)
            for (int a2 = 1 - p; a2 <= p; a2 += 2)
                for (int a3 = 1 - p; a3 <= p; a3 += 2)
                    if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == p)
                        out.quads.push_back({a0, a1, a2, a3});
    if ((int)out.quads.size() != p + 1) throw parse_error("quadruple count is off");

    int iq = sqrt_minus_one(q);
    auto md = [q](long long x) { return int(((x % q) + q) % q); };
    auto normalize = [&](Mat m) {
        int lead = m.a ? m.a : m.b ? m.b : m.c ? m.c : m.d;
        // scale so the first nonzero entry is 1
        int s = 1;
        for (int t = 1; t < q; ++t)
            if (lead * t % q == 1) s = t;
        return Mat{md((long long)m.a * s), md((long long)m.b * s), md((long long)m.c * s),
                   md((long long)m.d * s)};
    };
    auto key = [&](const Mat& m) {
        return uint64_t(((((uint64_t)m.a * q + m.b) * q) + m.c) * q + m.d);
    };
    auto unkey = [&](uint64_t k) {
        Mat m;
        m.d = int(k % q); k /= q;
        m.c = int(k % q); k /= q;
        m.b = int(k % q); k /= q;
        m.a = int(k);
        return m;
    };
    std::vector<uint64_t> gen_keys;
    for (const auto& a : out.quads) {
        Mat m{md(a[0] + (long long)iq * a[1]), md(a[2] + (long long)iq * a[3]),
              md(-a[2] + (long long)iq * a[3]), md(a[0] - (long long)iq * a[1])};
        gen_keys.push_back(key(normalize(m)));
    }
    {
        auto sorted = gen_keys;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error("projective generators collide");
    }

    // square determinant (Legendre(p|q) = 1) keeps the generators inside PSL
    int leg = legendre(p, q);
    long long expected_order = leg == -1 ? (long long)q * (q * q - 1) : (long long)q * (q * q - 1) / 2;
    out.group = key_group(
        (leg == -1 ? "pgl2:" : "psl2:") + std::to_string(q), key(Mat{1, 0, 0, 1}), gen_keys,
        [=](uint64_t x, uint64_t y) {
            Mat u = unkey(x), v = unkey(y);
            Mat w{md((long long)u.a * v.a + (long long)u.b * v.c),
                  md((long long)u.a * v.b + (long long)u.b * v.d),
                  md((long long)u.c * v.a + (long long)u.d * v.c),
                  md((long long)u.c * v.b + (long long)u.d * v.d)};
            return key(normalize(w));
        },
        [=](uint64_t x) {
            Mat u = unkey(x);
            return key(normalize(Mat{u.d, md(-u.b), md(-u.c), u.a}));
        },
        [=](uint64_t x) {
            Mat u = unkey(x);
            return "[[" + std::to_string(u.a) + "," + std::to_string(u.b) + "],[" +
                   std::to_string(u.c) + "," + std::to_string(u.d) + "]]";
        });
    if ((long long)out.group.order() != expected_order)
        throw parse_error("generators span the wrong projective group");

    std::vector<int> conn;
    for (uint64_t k : gen_keys) conn.push_back(out.group.index_of_key(k));
    out.graph = cayley_graph(out.group, connection_set(out.group, conn),
                             "lps_p" + std::to_string(p) + "_q" + std::to_string(q));
    out.bipartite = leg == -1;
    if (out.bipartite != out.graph.bipartition().has_value())
        throw parse_error("Legendre symbol disagrees with bipartiteness");
    return out;
}

Graph y_graph(const LpsGraph& x) {
    if (x.bipartite) return x.graph;
    Graph g = kronecker_double_cover(x.graph);
    g.name = "lps_cover_p" + std::to_string(x.p) + "_q" + std::to_string(x.q);
    return g;
}

} // namespace caylab
