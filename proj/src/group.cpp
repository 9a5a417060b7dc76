#include "caylab/group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <random>
#include <sstream>
#include <unordered_map>

namespace caylab {

namespace detail {

// labels sort by (length, lex) so that s2 < s10
static bool label_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct GroupImpl {
    std::string spec;
    int order = 0;
    std::vector<int> gen_indices; // post-BFS indices, in sorted-label order
    std::vector<int> inv_table;

    virtual ~GroupImpl() = default;
    virtual int mul(int a, int b) const = 0;
    virtual std::string label(int a) const = 0;
    virtual uint64_t key_of(int) const { throw parse_error(spec + ": not a key-backed group"); }
    virtual int index_of_key(uint64_t) const { throw parse_error(spec + ": not a key-backed group"); }
    virtual const std::vector<int>& perm_of(int) const {
        throw parse_error(spec + ": not a permutation-backed group");
    }
    virtual int perm_degree() const { throw parse_error(spec + ": not a permutation-backed group"); }
    virtual int index_of_perm(const std::vector<int>&) const {
        throw parse_error(spec + ": not a permutation-backed group");
    }
    virtual const std::vector<FiniteGroup>* factors() const { return nullptr; }
};

// ---- key-backed groups ----------------------------------------------------

struct KeyGroupImpl final : GroupImpl {
    std::vector<uint64_t> keys;
    std::unordered_map<uint64_t, int> index;
    std::function<uint64_t(uint64_t, uint64_t)> kmul;
    std::function<uint64_t(uint64_t)> kinv;
    std::function<std::string(uint64_t)> klabel;

    int mul(int a, int b) const override { return index.at(kmul(keys[a], keys[b])); }
    std::string label(int a) const override { return klabel(keys[a]); }
    uint64_t key_of(int a) const override { return keys[a]; }
    int index_of_key(uint64_t k) const override {
        auto it = index.find(k);
        return it == index.end() ? -1 : it->second;
    }
};

// ---- permutation-backed groups (points compose left to right) -------------

struct PermGroupImpl final : GroupImpl {
    int degree = 0;
    std::vector<std::vector<int>> elems;
    std::unordered_map<std::string, int> index;
    std::function<std::string(const std::vector<int>&)> plabel;

    static std::string pack(const std::vector<int>& p) {
        std::string s(p.size(), 0);
        for (size_t i = 0; i < p.size(); ++i) s[i] = char(p[i]);
        return s;
    }
    int lookup(const std::vector<int>& p) const {
        auto it = index.find(pack(p));
        return it == index.end() ? -1 : it->second;
    }
    int mul(int a, int b) const override {
        const auto& pa = elems[a];
        const auto& pb = elems[b];
        std::vector<int> c(degree);
        for (int i = 0; i < degree; ++i) c[i] = pb[pa[i]];
        int r = lookup(c);
        assert(r >= 0);
        return r;
    }
    std::string label(int a) const override { return plabel(elems[a]); }
    const std::vector<int>& perm_of(int a) const override { return elems[a]; }
    int perm_degree() const override { return degree; }
    int index_of_perm(const std::vector<int>& p) const override { return lookup(p); }
};

// ---- direct products -------------------------------------------------------

struct ProductGroupImpl final : GroupImpl {
    std::vector<FiniteGroup> facs;
    std::vector<long long> radix; // radix[i] = product of factor orders after i
    std::vector<uint64_t> keys;
    std::unordered_map<uint64_t, int> index;

    uint64_t combine(const std::vector<int>& comp) const {
        uint64_t k = 0;
        for (size_t i = 0; i < facs.size(); ++i) k += uint64_t(comp[i]) * uint64_t(radix[i]);
        return k;
    }
    std::vector<int> split(uint64_t k) const {
        std::vector<int> comp(facs.size());
        for (size_t i = 0; i < facs.size(); ++i) {
            comp[i] = int(k / uint64_t(radix[i]));
            k %= uint64_t(radix[i]);
        }
        return comp;
    }
    int mul(int a, int b) const override {
        auto ca = split(keys[a]), cb = split(keys[b]);
        std::vector<int> cc(facs.size());
        for (size_t i = 0; i < facs.size(); ++i) cc[i] = facs[i].mul(ca[i], cb[i]);
        return index.at(combine(cc));
    }
    std::string label(int a) const override {
        auto comp = split(keys[a]);
        std::string s = "(";
        for (size_t i = 0; i < facs.size(); ++i) {
            if (i) s += ",";
            s += facs[i].label(comp[i]);
        }
        return s + ")";
    }
    uint64_t key_of(int a) const override { return keys[a]; }
    int index_of_key(uint64_t k) const override {
        auto it = index.find(k);
        return it == index.end() ? -1 : it->second;
    }
    const std::vector<FiniteGroup>* factors() const override { return &facs; }
};

// breadth-first indexing from the identity over label-sorted generators,
// multiplying on the right; fills keys/index/order/gen_indices/inv_table
template <class Impl, class Elem>
void bfs_index(Impl& impl, const Elem& identity, std::vector<std::pair<std::string, Elem>> gens,
               std::function<Elem(const Elem&, const Elem&)> compose,
               std::function<void(const Elem&)> store, std::function<int(const Elem&)> find,
               int order_cap) {
    std::stable_sort(gens.begin(), gens.end(),
                     [](const auto& a, const auto& b) { return label_less(a.first, b.first); });
    store(identity);
    std::deque<Elem> queue{identity};
    while (!queue.empty()) {
        Elem cur = queue.front();
        queue.pop_front();
        for (const auto& [lbl, g] : gens) {
            (void)lbl;
            Elem nxt = compose(cur, g);
            if (find(nxt) == -1) {
                store(nxt);
                if (impl.order > order_cap) throw parse_error(impl.spec + ": order exceeds cap");
                queue.push_back(nxt);
            }
        }
    }
    impl.gen_indices.clear();
    for (const auto& [lbl, g] : gens) {
        (void)lbl;
        int idx = find(g);
        assert(idx >= 0);
        impl.gen_indices.push_back(idx);
    }
}

static void build_key_group(KeyGroupImpl& impl, uint64_t identity,
                            std::vector<uint64_t> generator_keys, int order_cap) {
    std::vector<std::pair<std::string, uint64_t>> gens;
    for (uint64_t k : generator_keys) gens.push_back({impl.klabel(k), k});
    bfs_index<KeyGroupImpl, uint64_t>(
        impl, identity, std::move(gens),
        [&](const uint64_t& a, const uint64_t& b) { return impl.kmul(a, b); },
        [&](const uint64_t& k) {
            impl.index.emplace(k, impl.order++);
            impl.keys.push_back(k);
        },
        [&](const uint64_t& k) { return impl.index_of_key(k); }, order_cap);
    impl.inv_table.resize(impl.order);
    for (int i = 0; i < impl.order; ++i) {
        int j = impl.index_of_key(impl.kinv(impl.keys[i]));
        if (j < 0) throw parse_error(impl.spec + ": inverse left the enumerated set");
        impl.inv_table[i] = j;
    }
}

static void build_perm_group(PermGroupImpl& impl, std::vector<std::vector<int>> gen_perms,
                             std::vector<std::string> gen_labels, int order_cap) {
    int d = impl.degree;
    std::vector<int> identity(d);
    for (int i = 0; i < d; ++i) identity[i] = i;
    std::vector<std::pair<std::string, std::vector<int>>> gens;
    for (size_t i = 0; i < gen_perms.size(); ++i)
        gens.push_back({gen_labels[i], std::move(gen_perms[i])});
    bfs_index<PermGroupImpl, std::vector<int>>(
        impl, identity, std::move(gens),
        [&](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> c(d);
            for (int i = 0; i < d; ++i) c[i] = b[a[i]];
            return c;
        },
        [&](const std::vector<int>& p) {
            impl.index.emplace(PermGroupImpl::pack(p), impl.order++);
            impl.elems.push_back(p);
        },
        [&](const std::vector<int>& p) { return impl.lookup(p); }, order_cap);
    impl.inv_table.resize(impl.order);
    for (int i = 0; i < impl.order; ++i) {
        std::vector<int> q(d);
        for (int x = 0; x < d; ++x) q[impl.elems[i][x]] = x;
        int j = impl.lookup(q);
        assert(j >= 0);
        impl.inv_table[i] = j;
    }
}

// cycle notation on 1-based points, "e" for the identity
static std::string cycle_label(const std::vector<int>& p) {
    std::string s;
    std::vector<uint8_t> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == int(i)) continue;
        s += "(";
        size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) s += " ";
            s += std::to_string(j + 1);
            first = false;
            j = size_t(p[j]);
        }
        s += ")";
    }
    return s.empty() ? "e" : s;
}

} // namespace detail

using detail::GroupImpl;
using detail::KeyGroupImpl;
using detail::PermGroupImpl;
using detail::ProductGroupImpl;

FiniteGroup::FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}
int FiniteGroup::order() const { return impl_->order; }
int FiniteGroup::mul(int a, int b) const { return impl_->mul(a, b); }
int FiniteGroup::inv(int a) const { return impl_->inv_table[a]; }
std::string FiniteGroup::label(int a) const { return impl_->label(a); }
const std::string& FiniteGroup::spec() const { return impl_->spec; }
const std::vector<int>& FiniteGroup::generators() const { return impl_->gen_indices; }
uint64_t FiniteGroup::key_of(int idx) const { return impl_->key_of(idx); }
int FiniteGroup::index_of_key(uint64_t key) const { return impl_->index_of_key(key); }
const std::vector<int>& FiniteGroup::perm_of(int idx) const { return impl_->perm_of(idx); }
int FiniteGroup::perm_degree() const { return impl_->perm_degree(); }
int FiniteGroup::index_of_perm(const std::vector<int>& p) const { return impl_->index_of_perm(p); }

int FiniteGroup::element_from_label(const std::string& lbl) const {
    for (int i = 0; i < order(); ++i)
        if (label(i) == lbl) return i;
    return -1;
}

const std::vector<FiniteGroup>& FiniteGroup::factors() const {
    const auto* f = impl_->factors();
    if (!f) throw parse_error(spec() + ": not a product group");
    return *f;
}

int FiniteGroup::product_index(const std::vector<int>& comp) const {
    const auto* p = dynamic_cast<const ProductGroupImpl*>(impl_.get());
    if (!p) throw parse_error(spec() + ": not a product group");
    return p->index.at(p->combine(comp));
}

std::vector<int> FiniteGroup::product_split(int idx) const {
    const auto* p = dynamic_cast<const ProductGroupImpl*>(impl_.get());
    if (!p) throw parse_error(spec() + ": not a product group");
    return p->split(p->keys[idx]);
}

FiniteGroup key_group(std::string spec_name, uint64_t identity_key,
                      std::vector<uint64_t> generator_keys,
                      std::function<uint64_t(uint64_t, uint64_t)> mul,
                      std::function<uint64_t(uint64_t)> inv,
                      std::function<std::string(uint64_t)> label, int order_cap) {
    auto impl = std::make_shared<KeyGroupImpl>();
    impl->spec = std::move(spec_name);
    impl->kmul = std::move(mul);
    impl->kinv = std::move(inv);
    impl->klabel = std::move(label);
    detail::build_key_group(*impl, identity_key, std::move(generator_keys), order_cap);
    return FiniteGroup(impl);
}

FiniteGroup perm_group(std::string spec_name, std::vector<std::vector<int>> generator_perms,
                       std::vector<std::string> generator_labels,
                       std::function<std::string(const std::vector<int>&)> label, int order_cap) {
    if (generator_perms.empty()) throw parse_error("perm_group needs at least one generator");
    auto impl = std::make_shared<PermGroupImpl>();
    impl->spec = std::move(spec_name);
    impl->degree = int(generator_perms[0].size());
    impl->plabel = label ? std::move(label) : detail::cycle_label;
    detail::build_perm_group(*impl, std::move(generator_perms), std::move(generator_labels),
                             order_cap);
    return FiniteGroup(impl);
}

// ---- family builders -------------------------------------------------------

namespace {

FiniteGroup make_cyclic(int n) {
    auto lbl = [](uint64_t k) { return k == 0 ? std::string("e") : "g^" + std::to_string(k); };
    std::vector<uint64_t> gens;
    if (n > 1) gens.push_back(1);
    return key_group(
        "cyclic:" + std::to_string(n), 0, gens,
        [n](uint64_t a, uint64_t b) { return (a + b) % uint64_t(n); },
        [n](uint64_t a) { return (uint64_t(n) - a) % uint64_t(n); }, lbl);
}

FiniteGroup make_dihedral(int n) {
    // key = 2*i + r for a^i b^r
    auto lbl = [](uint64_t k) {
        uint64_t i = k >> 1;
        bool b = k & 1;
        if (i == 0) return b ? std::string("b") : std::string("e");
        std::string s = "a^" + std::to_string(i);
        return b ? s + " b" : s;
    };
    std::vector<uint64_t> gens;
    if (n > 1) gens.push_back(2); // a
    gens.push_back(1);            // b
    return key_group(
        "dihedral:" + std::to_string(n), 0, gens,
        [n](uint64_t x, uint64_t y) {
            long long i = (long long)(x >> 1), r = (long long)(x & 1);
            long long j = (long long)(y >> 1), s = (long long)(y & 1);
            long long k = ((i + (r ? -j : j)) % n + n) % n;
            return uint64_t(2 * k + (r ^ s));
        },
        [n](uint64_t x) {
            long long i = (long long)(x >> 1), r = (long long)(x & 1);
            return r ? x : uint64_t(2 * (((-i) % n + n) % n));
        },
        lbl);
}

FiniteGroup make_elementary(int p, int r) {
    long long order = 1;
    for (int i = 0; i < r; ++i) {
        order *= p;
        if (order > kMaxGroupOrder) throw parse_error("elementary group exceeds order cap");
    }
    auto digits = [p, r](uint64_t k) {
        std::vector<int> d(r);
        for (int i = 0; i < r; ++i) {
            d[i] = int(k % uint64_t(p));
            k /= uint64_t(p);
        }
        return d;
    };
    auto pack = [p, r](const std::vector<int>& d) {
        uint64_t k = 0;
        for (int i = r - 1; i >= 0; --i) k = k * uint64_t(p) + uint64_t(d[i]);
        return k;
    };
    std::vector<uint64_t> gens;
    uint64_t pw = 1;
    for (int i = 0; i < r; ++i) {
        gens.push_back(pw);
        pw *= uint64_t(p);
    }
    return key_group(
        "elementary:" + std::to_string(p) + "^" + std::to_string(r), 0, gens,
        [=](uint64_t a, uint64_t b) {
            auto da = digits(a), db = digits(b);
            for (int i = 0; i < r; ++i) da[i] = (da[i] + db[i]) % p;
            return pack(da);
        },
        [=](uint64_t a) {
            auto d = digits(a);
            for (int i = 0; i < r; ++i) d[i] = (p - d[i]) % p;
            return pack(d);
        },
        [=](uint64_t k) {
            if (k == 0) return std::string("e");
            auto d = digits(k);
            std::string s = "(";
            for (int i = 0; i < r; ++i) {
                if (i) s += ",";
                s += std::to_string(d[i]);
            }
            return s + ")";
        });
}

FiniteGroup make_pauli() {
    // key = phase*4 + p; phase 0..3 = 1,i,-1,-i; p 0..3 = I,X,Y,Z
    static const int prod_phase[4][4] = {
        {0, 0, 0, 0}, // I.
        {0, 0, 1, 3}, // X. : XX=I, XY=iZ, XZ=-iY
        {0, 3, 0, 1}, // Y. : YX=-iZ, YY=I, YZ=iX
        {0, 1, 3, 0}, // Z. : ZX=iY, ZY=-iX, ZZ=I
    };
    static const int prod_p[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    auto lbl = [](uint64_t k) {
        static const char* phase_s[4] = {"", "i", "-", "-i"};
        static const char* p_s[4] = {"I", "X", "Y", "Z"};
        return std::string(phase_s[k >> 2]) + p_s[k & 3];
    };
    return key_group(
        "pauli", 0, {1, 2, 3},
        [](uint64_t a, uint64_t b) {
            int pa = int(a >> 2), qa = int(a & 3);
            int pb = int(b >> 2), qb = int(b & 3);
            int phase = (pa + pb + prod_phase[qa][qb]) % 4;
            return uint64_t(phase * 4 + prod_p[qa][qb]);
        },
        [](uint64_t a) {
            int pa = int(a >> 2), qa = int(a & 3);
            return uint64_t(((4 - pa) % 4) * 4 + qa);
        },
        lbl);
}

// <x,y | x^8 = y^2 = 1, yx = x^c y> in normal form x^a y^b;
// c = 5 gives the modular group of order 16, c = 3 the quasidihedral group
FiniteGroup make_two_gen_16(const std::string& spec, int c) {
    auto lbl = [](uint64_t k) {
        int a = int(k >> 1), b = int(k & 1);
        std::string s;
        if (a == 1) s = "x";
        else if (a > 1) s = "x^" + std::to_string(a);
        if (b) s += s.empty() ? "y" : " y";
        return s.empty() ? std::string("e") : s;
    };
    auto powc = [c](int b) { return b ? c : 1; };
    return key_group(
        spec, 0, {2, 1},
        [powc](uint64_t x, uint64_t y) {
            int a = int(x >> 1), b = int(x & 1);
            int cc = int(y >> 1), d = int(y & 1);
            int na = (a + cc * powc(b)) % 8;
            return uint64_t(2 * na + (b ^ d));
        },
        [powc](uint64_t x) {
            int a = int(x >> 1), b = int(x & 1);
            int na = b ? ((-powc(1) * a) % 8 + 8) % 8 : (8 - a) % 8;
            return uint64_t(2 * na + b);
        },
        lbl);
}

std::vector<int> transposition(int n, int i, int j) {
    std::vector<int> p(n);
    for (int x = 0; x < n; ++x) p[x] = x;
    std::swap(p[i], p[j]);
    return p;
}

FiniteGroup make_symmetric(int n) {
    std::vector<std::vector<int>> gens;
    std::vector<std::string> labels;
    for (int i = 0; i + 1 < n; ++i) {
        gens.push_back(transposition(n, i, i + 1));
        labels.push_back(detail::cycle_label(gens.back()));
    }
    if (gens.empty()) { // n = 1
        std::vector<int> id{0};
        gens.push_back(id);
        labels.push_back("e");
    }
    return perm_group("symmetric:" + std::to_string(n), std::move(gens), std::move(labels));
}

FiniteGroup make_alternating(int n) {
    if (n < 3) throw parse_error("alternating:n needs n >= 3");
    std::vector<std::vector<int>> gens;
    std::vector<std::string> labels;
    for (int i = 2; i < n; ++i) {
        std::vector<int> p(n);
        for (int x = 0; x < n; ++x) p[x] = x;
        p[0] = 1; p[1] = i; p[i] = 0; // the 3-cycle (1 2 i+1)
        gens.push_back(p);
        labels.push_back(detail::cycle_label(p));
    }
    return perm_group("alternating:" + std::to_string(n), std::move(gens), std::move(labels));
}

// signed permutations as permutations of 2n points; 0..n-1 are +1..+n,
// n..2n-1 are -1..-n
std::vector<int> signed_perm(int n, uint32_t flips, const std::vector<int>& p) {
    std::vector<int> out(2 * n);
    for (int i = 0; i < n; ++i) {
        bool neg = (flips >> i) & 1;
        out[i] = neg ? p[i] + n : p[i];
        out[i + n] = neg ? p[i] : p[i] + n;
    }
    return out;
}

std::string signed_label(int n, const std::vector<int>& perm) {
    uint32_t flips = 0;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
        if (perm[i] >= n) {
            flips |= 1u << i;
            p[i] = perm[i] - n;
        } else
            p[i] = perm[i];
    }
    std::string s;
    if (flips) {
        s = "{";
        bool first = true;
        for (int i = 0; i < n; ++i)
            if ((flips >> i) & 1) {
                if (!first) s += ",";
                s += std::to_string(i + 1);
                first = false;
            }
        s += "}";
    }
    std::string cyc = detail::cycle_label(p);
    if (cyc != "e") s += cyc;
    return s.empty() ? std::string("e") : s;
}

FiniteGroup make_signed(int n, bool even_only) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::vector<std::vector<int>> gens;
    std::vector<std::string> labels;
    for (int i = 0; i + 1 < n; ++i) {
        gens.push_back(signed_perm(n, 0, transposition(n, i, i + 1)));
        labels.push_back(signed_label(n, gens.back()));
    }
    if (!even_only) {
        gens.push_back(signed_perm(n, 1u, id)); // flip coordinate 1
    } else {
        if (n < 2) throw parse_error("even-signed:n needs n >= 2");
        gens.push_back(signed_perm(n, 3u, transposition(n, 0, 1))); // {1,2}(1 2)
    }
    labels.push_back(signed_label(n, gens.back()));
    std::string spec = (even_only ? "even-signed:" : "signed:") + std::to_string(n);
    return perm_group(spec, std::move(gens), std::move(labels),
                      [n](const std::vector<int>& p) { return signed_label(n, p); });
}

std::vector<std::string> split_product_args(const std::string& inner) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : inner) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    parts.push_back(cur);
    return parts;
}

FiniteGroup make_product(const std::string& spec, const std::vector<std::string>& parts) {
    auto impl = std::make_shared<ProductGroupImpl>();
    impl->spec = spec;
    long long order = 1;
    for (const auto& p : parts) {
        impl->facs.push_back(group_make(p));
        order *= impl->facs.back().order();
        if (order > kMaxGroupOrder) throw parse_error("product exceeds order cap");
    }
    size_t nf = impl->facs.size();
    impl->radix.assign(nf, 1);
    for (size_t i = nf; i-- > 1;)
        impl->radix[i - 1] = impl->radix[i] * impl->facs[i].order();

    std::vector<uint64_t> gen_keys;
    for (size_t i = 0; i < nf; ++i)
        for (int gi : impl->facs[i].generators()) {
            std::vector<int> comp(nf, 0);
            comp[i] = gi;
            gen_keys.push_back(impl->combine(comp));
        }

    // BFS over embedded factor generators, sorted by product label
    std::vector<std::pair<std::string, uint64_t>> gens;
    {
        // need labels before elements are indexed; compute from keys directly
        auto key_label = [&](uint64_t k) {
            auto comp = impl->split(k);
            std::string s = "(";
            for (size_t i = 0; i < nf; ++i) {
                if (i) s += ",";
                s += impl->facs[i].label(comp[i]);
            }
            return s + ")";
        };
        for (uint64_t k : gen_keys) gens.push_back({key_label(k), k});
    }
    detail::bfs_index<ProductGroupImpl, uint64_t>(
        *impl, 0, std::move(gens),
        [&](const uint64_t& a, const uint64_t& b) {
            auto ca = impl->split(a), cb = impl->split(b);
            std::vector<int> cc(nf);
            for (size_t i = 0; i < nf; ++i) cc[i] = impl->facs[i].mul(ca[i], cb[i]);
            return impl->combine(cc);
        },
        [&](const uint64_t& k) {
            impl->index.emplace(k, impl->order++);
            impl->keys.push_back(k);
        },
        [&](const uint64_t& k) {
            auto it = impl->index.find(k);
            return it == impl->index.end() ? -1 : it->second;
        },
        kMaxGroupOrder);
    if (impl->order != order)
        throw parse_error(spec + ": generators span a proper subgroup of the product");
    impl->inv_table.resize(impl->order);
    for (int i = 0; i < impl->order; ++i) {
        auto comp = impl->split(impl->keys[i]);
        for (size_t f = 0; f < nf; ++f) comp[f] = impl->facs[f].inv(comp[f]);
        impl->inv_table[i] = impl->index.at(impl->combine(comp));
    }
    return FiniteGroup(impl);
}

} // namespace

FiniteGroup group_make(const std::string& spec) {
    if (spec == "pauli") return make_pauli();
    if (spec == "modular:16") return make_two_gen_16(spec, 5);
    if (spec == "quasidihedral:16") return make_two_gen_16(spec, 3);
    if (spec.rfind("product:(", 0) == 0 && spec.back() == ')')
        return make_product(spec, split_product_args(spec.substr(9, spec.size() - 10)));

    auto colon = spec.find(':');
    if (colon == std::string::npos) throw parse_error("bad group spec: " + spec);
    std::string fam = spec.substr(0, colon);
    std::string arg = spec.substr(colon + 1);
    if (fam == "elementary") {
        auto caret = arg.find('^');
        if (caret == std::string::npos) throw parse_error("elementary spec needs p^r");
        int p = std::stoi(arg.substr(0, caret));
        int r = std::stoi(arg.substr(caret + 1));
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw parse_error("elementary:p^r needs p prime");
        if (p < 2 || r < 1) throw parse_error("bad elementary spec");
        return make_elementary(p, r);
    }
    int n = std::stoi(arg);
    if (n < 1) throw parse_error("bad group spec: " + spec);
    if (fam == "cyclic") {
        if (n > kMaxGroupOrder) throw parse_error("order cap exceeded");
        return make_cyclic(n);
    }
    if (fam == "dihedral") {
        if (2 * n > kMaxGroupOrder) throw parse_error("order cap exceeded");
        return make_dihedral(n);
    }
    if (fam == "symmetric") return make_symmetric(n);
    if (fam == "alternating") return make_alternating(n);
    if (fam == "signed") return make_signed(n, false);
    if (fam == "even-signed") return make_signed(n, true);
    throw parse_error("unknown group family: " + fam);
}

// ---- connection sets and Cayley graphs --------------------------------------

ConnectionSet connection_set(const FiniteGroup& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    ConnectionSet c;
    for (int e : elems) {
        if (e <= 0 || e >= g.order())
            throw parse_error("connection set element out of range or identity");
    }
    for (int e : elems)
        if (!std::binary_search(elems.begin(), elems.end(), g.inv(e)))
            throw parse_error("connection set not closed under inverse (missing inverse of " +
                              g.label(e) + ")");
    c.elems = std::move(elems);

    // generation is recorded, not required
    std::vector<uint8_t> seen(g.order(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int e : c.elems) {
            int y = g.mul(x, e);
            if (!seen[y]) {
                seen[y] = 1;
                ++cnt;
                q.push_back(y);
            }
        }
    }
    c.generates = cnt == g.order();
    return c;
}

ConnectionSet random_connection_set(const FiniteGroup& g, int size, uint64_t seed) {
    if (size < 1 || size >= g.order()) throw parse_error("bad connection set size");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, g.order() - 1);
    std::vector<uint8_t> in(g.order(), 0);
    std::vector<int> elems;
    while (int(elems.size()) < size) {
        int x = pick(rng);
        if (in[x]) continue;
        in[x] = 1;
        elems.push_back(x);
        int y = g.inv(x);
        if (!in[y]) {
            in[y] = 1;
            elems.push_back(y);
        }
    }
    return connection_set(g, std::move(elems));
}

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& c, std::string name) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(size_t(g.order()) * c.elems.size());
    for (int x = 0; x < g.order(); ++x)
        for (int e : c.elems) edges.push_back({x, g.mul(x, e)});
    if (name.empty()) name = "Cay(" + g.spec() + ")";
    Graph out = Graph::from_edges(g.order(), edges, {}, std::move(name));
    out.vertex_transitive = true;
    return out;
}

SignedPermElement signed_decode(const FiniteGroup& g, int idx) {
    int n2 = g.perm_degree();
    int n = n2 / 2;
    const auto& perm = g.perm_of(idx);
    SignedPermElement e;
    e.p.resize(n);
    for (int i = 0; i < n; ++i) {
        if (perm[i] >= n) {
            e.flips |= 1u << i;
            e.p[i] = perm[i] - n;
        } else
            e.p[i] = perm[i];
    }
    return e;
}

int signed_encode(const FiniteGroup& g, const SignedPermElement& e) {
    int n = g.perm_degree() / 2;
    return g.index_of_perm(signed_perm(n, e.flips, e.p));
}

} // namespace caylab
