#pragma once

#include <string>
#include <vector>

#include "caylab/graph.hpp"

namespace caylab {

enum class CertKind {
    LowDegreeSet,   // induced max degree <= k
    MatchingSet,    // induced max degree <= 1
    Partition,      // V = A ⊎ B, both sides induced max degree <= k; size = |A|-|B|
    CubeEmbedding,  // verts[w] is the image of binary word w; k = dimension
    IndependentSet, // induced max degree 0
};

std::string to_string(CertKind k);
CertKind cert_kind_from_string(const std::string& s);

struct Certificate {
    CertKind kind = CertKind::LowDegreeSet;
    std::string graph_fingerprint;
    int k = 0;
    long long size = 0;
    std::vector<int> verts;   // the set; side A for Partition; word order for CubeEmbedding
    std::vector<int> verts_b; // side B for Partition

    std::string serialize() const;
    static Certificate parse(const std::string& text);
};

struct VerifyReport {
    bool valid = false;
    std::string reason; // empty when valid
};

VerifyReport verify_certificate(const Graph& g, const Certificate& c);

// helpers used by the construction modules
Certificate make_set_certificate(const Graph& g, CertKind kind, int k, std::vector<int> verts);
Certificate make_partition_certificate(const Graph& g, int k, std::vector<int> a, std::vector<int> b);

} // namespace caylab
