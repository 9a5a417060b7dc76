#include "caylab/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace caylab {

std::string to_string(CertKind k) {
    switch (k) {
    case CertKind::LowDegreeSet: return "low-degree-set";
    case CertKind::MatchingSet: return "matching-set";
    case CertKind::Partition: return "partition";
    case CertKind::CubeEmbedding: return "cube-embedding";
    case CertKind::IndependentSet: return "independent-set";
    }
    throw parse_error("bad certificate kind");
}

CertKind cert_kind_from_string(const std::string& s) {
    if (s == "low-degree-set") return CertKind::LowDegreeSet;
    if (s == "matching-set") return CertKind::MatchingSet;
    if (s == "partition") return CertKind::Partition;
    if (s == "cube-embedding") return CertKind::CubeEmbedding;
    if (s == "independent-set") return CertKind::IndependentSet;
    throw parse_error("unknown certificate kind: " + s);
}

std::string Certificate::serialize() const {
    std::ostringstream out;
    out << "certificate " << to_string(kind) << '\n';
    out << "fingerprint " << graph_fingerprint << '\n';
    out << "k " << k << '\n';
    out << "size " << size << '\n';
    if (kind == CertKind::Partition) {
        for (int v : verts) out << "A " << v << '\n';
        for (int v : verts_b) out << "B " << v << '\n';
    } else {
        for (int v : verts) out << v << '\n';
    }
    return out.str();
}

Certificate Certificate::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    Certificate c;
    if (!(in >> tok) || tok != "certificate") throw parse_error("expected 'certificate'");
    if (!(in >> tok)) throw parse_error("missing certificate kind");
    c.kind = cert_kind_from_string(tok);
    if (!(in >> tok) || tok != "fingerprint") throw parse_error("expected 'fingerprint'");
    if (!(in >> c.graph_fingerprint)) throw parse_error("missing fingerprint");
    if (c.graph_fingerprint.size() != 64) throw parse_error("fingerprint must be 64 hex chars");
    if (!(in >> tok) || tok != "k") throw parse_error("expected 'k'");
    if (!(in >> c.k)) throw parse_error("missing k");
    if (!(in >> tok) || tok != "size") throw parse_error("expected 'size'");
    if (!(in >> c.size)) throw parse_error("missing size");
    while (in >> tok) {
        if (tok == "A") {
            int v;
            if (!(in >> v)) throw parse_error("truncated A line");
            c.verts.push_back(v);
        } else if (tok == "B") {
            int v;
            if (!(in >> v)) throw parse_error("truncated B line");
            c.verts_b.push_back(v);
        } else {
            c.verts.push_back(std::stoi(tok));
        }
    }
    return c;
}

static bool all_distinct_in_range(const std::vector<int>& v, int n, std::string* why) {
    Bitset seen(n);
    for (int x : v) {
        if (x < 0 || x >= n) {
            *why = "vertex out of range";
            return false;
        }
        if (seen.test(x)) {
            *why = "repeated vertex";
            return false;
        }
        seen.set(x);
    }
    return true;
}

VerifyReport verify_certificate(const Graph& g, const Certificate& c) {
    VerifyReport r;
    if (c.graph_fingerprint != g.fingerprint()) {
        r.reason = "fingerprint mismatch";
        return r;
    }
    std::string why;
    if (!all_distinct_in_range(c.verts, g.n, &why)) {
        r.reason = why;
        return r;
    }

    switch (c.kind) {
    case CertKind::LowDegreeSet:
    case CertKind::MatchingSet:
    case CertKind::IndependentSet: {
        int cap = c.kind == CertKind::LowDegreeSet ? c.k
                : c.kind == CertKind::MatchingSet  ? 1
                                                   : 0;
        if (c.kind != CertKind::LowDegreeSet && c.k != cap) {
            r.reason = "k field disagrees with certificate kind";
            return r;
        }
        if (c.size != (long long)c.verts.size()) {
            r.reason = "size field disagrees with vertex list";
            return r;
        }
        int d = g.induced_max_degree(c.verts);
        if (d > cap) {
            r.reason = "induced degree " + std::to_string(d) + " exceeds " + std::to_string(cap);
            return r;
        }
        break;
    }
    case CertKind::Partition: {
        if (!all_distinct_in_range(c.verts_b, g.n, &why)) {
            r.reason = why;
            return r;
        }
        if ((long long)c.verts.size() + (long long)c.verts_b.size() != g.n) {
            r.reason = "A and B do not cover the vertex set";
            return r;
        }
        Bitset a(g.n);
        for (int v : c.verts) a.set(v);
        for (int v : c.verts_b)
            if (a.test(v)) {
                r.reason = "A and B overlap";
                return r;
            }
        if (c.size != (long long)c.verts.size() - (long long)c.verts_b.size()) {
            r.reason = "size field is not |A|-|B|";
            return r;
        }
        int da = g.induced_max_degree(c.verts);
        int db = g.induced_max_degree(c.verts_b);
        if (da > c.k || db > c.k) {
            r.reason = "a side exceeds degree bound " + std::to_string(c.k);
            return r;
        }
        break;
    }
    case CertKind::CubeEmbedding: {
        int d = c.k;
        if (d < 0 || d > 20 || (1LL << d) != (long long)c.verts.size() || c.size != (1LL << d)) {
            r.reason = "cube-embedding size must be 2^k";
            return r;
        }
        // subgraph containment: every pair of words at hamming distance 1
        // must be an edge; extra edges among the images are allowed
        for (size_t w1 = 0; w1 < c.verts.size(); ++w1)
            for (int t = 0; t < d; ++t) {
                size_t w2 = w1 ^ (size_t(1) << t);
                if (w2 < w1) continue;
                if (!g.has_edge(c.verts[w1], c.verts[w2])) {
                    r.reason = "words " + std::to_string(w1) + "," + std::to_string(w2) +
                               " miss an edge";
                    return r;
                }
            }
        break;
    }
    }
    r.valid = true;
    return r;
}

Certificate make_set_certificate(const Graph& g, CertKind kind, int k, std::vector<int> verts) {
    Certificate c;
    c.kind = kind;
    c.graph_fingerprint = g.fingerprint();
    c.k = k;
    c.size = (long long)verts.size();
    std::sort(verts.begin(), verts.end());
    c.verts = std::move(verts);
    return c;
}

Certificate make_partition_certificate(const Graph& g, int k, std::vector<int> a, std::vector<int> b) {
    Certificate c;
    c.kind = CertKind::Partition;
    c.graph_fingerprint = g.fingerprint();
    c.k = k;
    c.size = (long long)a.size() - (long long)b.size();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    c.verts = std::move(a);
    c.verts_b = std::move(b);
    return c;
}

} // namespace caylab
