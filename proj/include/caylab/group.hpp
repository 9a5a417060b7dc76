#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "caylab/graph.hpp"

namespace caylab {

constexpr int kMaxGroupOrder = 200000;

namespace detail {
struct GroupImpl;
}

// Finite group with elements indexed 0..order-1.  Index 0 is the identity and
// the rest follow breadth-first order from the identity over the generator
// list sorted by label, multiplying on the right.  The indexing is therefore
// a pure function of the construction spec.
class FiniteGroup {
  public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::shared_ptr<const detail::GroupImpl> impl);

    int order() const;
    int identity() const { return 0; }
    int mul(int a, int b) const; // apply a, then b
    int inv(int a) const;
    std::string label(int a) const;
    const std::string& spec() const;
    const std::vector<int>& generators() const;
    int element_from_label(const std::string& lbl) const; // -1 if absent

    // family-specific element views; throw on the wrong backend
    uint64_t key_of(int idx) const;
    int index_of_key(uint64_t key) const; // -1 if absent
    const std::vector<int>& perm_of(int idx) const;
    int perm_degree() const;
    int index_of_perm(const std::vector<int>& p) const; // -1 if absent

    // product groups
    const std::vector<FiniteGroup>& factors() const;
    int product_index(const std::vector<int>& comp) const;
    std::vector<int> product_split(int idx) const;

    const detail::GroupImpl* impl() const { return impl_.get(); }

  private:
    std::shared_ptr<const detail::GroupImpl> impl_;
};

// Specs: dihedral:n, cyclic:n, symmetric:n, alternating:n, signed:n,
// even-signed:n, elementary:p^r, pauli, modular:16, quasidihedral:16,
// product:(spec1,spec2,...)
FiniteGroup group_make(const std::string& spec);

// Construction hooks for modules that bring their own element encoding.
FiniteGroup key_group(std::string spec_name, uint64_t identity_key,
                      std::vector<uint64_t> generator_keys,
                      std::function<uint64_t(uint64_t, uint64_t)> mul,
                      std::function<uint64_t(uint64_t)> inv,
                      std::function<std::string(uint64_t)> label,
                      int order_cap = kMaxGroupOrder);
// Generators act on points 0..degree-1 and compose left to right:
// (p*q)(x) = q(p(x)).
FiniteGroup perm_group(std::string spec_name, std::vector<std::vector<int>> generator_perms,
                       std::vector<std::string> generator_labels,
                       std::function<std::string(const std::vector<int>&)> label = {},
                       int order_cap = kMaxGroupOrder);

struct ConnectionSet {
    std::vector<int> elems; // sorted element indices
    bool generates = false; // recorded, not required
};

// enforces: identity excluded, closed under inverse; records generation
ConnectionSet connection_set(const FiniteGroup& g, std::vector<int> elems);
// draws uniform non-identity elements (mt19937_64 seeded as given) and closes
// under inverse until at least `size` elements are present
ConnectionSet random_connection_set(const FiniteGroup& g, int size, uint64_t seed);

Graph cayley_graph(const FiniteGroup& g, const ConnectionSet& c, std::string name = "");

// The 2^[n] x S_n view used by the signed families.  `flips` is a mask over
// coordinates 1..n (bit i-1 for coordinate i), `p` is 0-based one-line
// notation.  The element flips the signs of the coordinates in `flips`, then
// permutes; composition satisfies (A,p)*(B,t) = (A xor p^{-1}(B), p*t).
struct SignedPermElement {
    uint32_t flips = 0;
    std::vector<int> p;
};

SignedPermElement signed_decode(const FiniteGroup& g, int idx);
int signed_encode(const FiniteGroup& g, const SignedPermElement& e);

} // namespace caylab
