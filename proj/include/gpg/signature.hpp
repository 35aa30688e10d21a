#pragma once
// Signed-graph layer: signatures as negative-edge sets, vertex switching,
// cycle signs, the spanning-tree canonical form (ClassId), and exhaustive
// minimal-signature search over all switchings.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpg/graph.hpp"

namespace gpg {

// Set of negative edges; width pins the owning graph's edge count so
// signatures from different graphs cannot be mixed silently.
struct Signature {
    std::uint64_t mask = 0;
    int width = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature& a, const Signature& b) {
        return a.mask <=> b.mask;
    }
    int size() const;
};

// Vertex subset used for switching.
struct SwitchSet {
    std::uint32_t mask = 0;
    int width = 0;

    friend bool operator==(const SwitchSet&, const SwitchSet&) = default;
    int size() const;
};

// Canonical label of a switching class: signs of the co-tree edges of the
// tree-positive form, first co-tree edge = most significant bit. Two
// signatures have equal ClassIds iff they are switching equivalent.
struct ClassId {
    std::uint32_t value = 0;
    int length = 0;

    friend bool operator==(const ClassId&, const ClassId&) = default;
    friend auto operator<=>(const ClassId& a, const ClassId& b) {
        return a.value <=> b.value;
    }
    std::string to_string() const;  // MSB-first bitstring, `length` chars
    static ClassId from_string(const std::string& bits);
};

// length -> count of negative cycles of that length; carries an entry for
// every length in the census, including zero counts.
using NegCycleProfile = std::map<int, int>;

Signature make_signature(const Graph& g, std::uint64_t mask);

// Flip every edge with exactly one endpoint in s.
// Throws InvalidArgument on width mismatch.
Signature apply_switch(const Graph& g, const Signature& sig, const SwitchSet& s);

// +1 or -1. Throws InvalidArgument when the cycle doesn't fit the graph.
int cycle_sign(const Signature& sig, const Cycle& cycle);

NegCycleProfile neg_profile(const Graph& g, const std::vector<Cycle>& cycles,
                            const Signature& sig);

// Balanced == switching equivalent to the all-positive signature.
bool is_balanced(const Graph& g, const SpanningTree& tree, const Signature& sig);

// Canonical form: the unique switch making every tree edge positive, with
// vertex 0 kept out of the switch set. Idempotent.
std::pair<ClassId, SwitchSet> tree_normalize(const Graph& g,
                                             const SpanningTree& tree,
                                             const Signature& sig);

// Signature whose tree-positive form realizes the given class.
Signature class_representative(const Graph& g, const SpanningTree& tree,
                               ClassId id);

bool switching_equivalent(const Graph& g, const SpanningTree& tree,
                          const Signature& a, const Signature& b);

struct MinimalResult {
    int size = 0;
    std::vector<Signature> witnesses;      // ascending by edge mask, no dups
    std::vector<SwitchSet> witness_switch; // aligned with witnesses
};

inline constexpr int kMinimalVertexBound = 26;

// Exhaustive scan over all 2^(V-1) switchings (vertex 0 fixed out).
// Every minimum-size equivalent signature appears exactly once. `jobs`
// partitions the scan range; the result is partition independent.
// Throws CapExceeded when V exceeds max_vertices.
MinimalResult minimal_signature(const Graph& g, const Signature& sig,
                                bool collect_witnesses = true, int jobs = 1,
                                int max_vertices = kMinimalVertexBound);

bool is_matching(const Graph& g, const Signature& sig);

}  // namespace gpg
