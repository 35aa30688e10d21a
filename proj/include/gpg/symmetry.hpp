#pragma once
// Automorphisms of prism graphs P(n,1): rotations, reflections, the
// ring-swap, their closure (order 4n for odd n), a brute-force group for
// small graphs, and the induced actions on signatures and switching classes.

#include <string>
#include <vector>

#include "gpg/graph.hpp"
#include "gpg/signature.hpp"

namespace gpg {

struct Permutation {
    std::vector<int> images;    // vertex -> vertex
    std::vector<int> edge_map;  // edge -> edge, induced

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images <=> b.images;
    }
};

// Builds the induced edge map; throws InvalidArgument when images is not an
// automorphism of g.
Permutation make_permutation(const Graph& g, std::vector<int> images);

// rho_k: u_i -> u_{i+k}, v_i -> v_{i+k}. Any generalized Petersen graph.
Permutation rho(const Graph& g, int k);

// delta_k: fixes u_k and v_k, swaps u_{k+i} <-> u_{k-i} (same on the inner
// ring). Prisms with odd n only; even prisms are rejected because their
// automorphism group is larger than the dihedral-times-swap family handled
// here (the cube P(4,1) gains extra symmetries).
Permutation delta(const Graph& g, int k);

// gamma: swaps the rings, u_i <-> v_i; fixes every spoke. Prisms (k = 1).
Permutation gamma(const Graph& g);

struct AutGroup {
    std::vector<Permutation> elements;        // sorted by vertex images
    std::vector<std::string> generator_tags;  // aligned: "rho 2", "delta 0",
                                              // "gamma", "identity", "composite"
    int order() const { return static_cast<int>(elements.size()); }
};

// Closure of {rho_1, delta_0, gamma} for odd-prism P(n,1), 3 <= n <= 13.
AutGroup aut_group(const Graph& g);

// All vertex permutations preserving adjacency; V <= 20.
std::vector<Permutation> brute_force_automorphisms(const Graph& g);

// Relabels the negative edges along p. Throws on width mismatch.
Signature apply_to_signature(const Permutation& p, const Signature& sig);

// Induced action on switching classes (well-defined: switching commutes
// with relabeling).
ClassId act_on_class(const Graph& g, const SpanningTree& tree,
                     const Permutation& p, ClassId id);

}  // namespace gpg
