#include "gpg/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace gpg {

Permutation make_permutation(const Graph& g, std::vector<int> images) {
    int V = g.vertex_count();
    if (static_cast<int>(images.size()) != V)
        throw InvalidArgument("permutation image list must cover every vertex");
    std::vector<char> hit(V, 0);
    for (int x : images) {
        if (x < 0 || x >= V || hit[x])
            throw InvalidArgument("vertex images do not form a permutation");
        hit[x] = 1;
    }
    Permutation p{std::move(images), {}};
    p.edge_map.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);
        int img = g.find_edge(p.images[a], p.images[b]);
        if (img < 0)
            throw InvalidArgument("vertex map is not an automorphism: edge " +
                                  g.edge_name(e) + " has no image");
        p.edge_map.push_back(img);
    }
    return p;
}

static int require_petersen(const Graph& g, const char* what) {
    if (g.petersen_n() == 0)
        throw InvalidArgument(std::string(what) +
                              " requires a generalized Petersen graph");
    return g.petersen_n();
}

static int mod(int a, int n) { return ((a % n) + n) % n; }

Permutation rho(const Graph& g, int k) {
    int n = require_petersen(g, "rho");
    std::vector<int> images(2 * n);
    for (int i = 0; i < n; ++i) {
        images[i] = mod(i + k, n);
        images[n + i] = n + mod(i + k, n);
    }
    return make_permutation(g, std::move(images));
}

Permutation delta(const Graph& g, int k) {
    int n = require_petersen(g, "delta");
    if (g.petersen_k() != 1)
        throw InvalidArgument("delta is defined for prisms (k = 1)");
    if (n % 2 == 0)
        throw InvalidArgument(
            "delta requires an odd prism; even prisms have automorphisms "
            "beyond the reflection family");
    std::vector<int> images(2 * n);
    for (int i = 0; i < n; ++i) {
        images[i] = mod(2 * k - i, n);
        images[n + i] = n + mod(2 * k - i, n);
    }
    return make_permutation(g, std::move(images));
}

Permutation gamma(const Graph& g) {
    int n = require_petersen(g, "gamma");
    if (g.petersen_k() != 1)
        throw InvalidArgument("gamma is defined for prisms (k = 1)");
    std::vector<int> images(2 * n);
    for (int i = 0; i < n; ++i) {
        images[i] = n + i;
        images[n + i] = i;
    }
    return make_permutation(g, std::move(images));
}

namespace {

// Tags an element by recognizing it against the named families.
std::string tag_of(const Graph& g, const Permutation& p) {
    int n = g.petersen_n();
    bool identity = true;
    for (int v = 0; v < 2 * n; ++v)
        if (p.images[v] != v) { identity = false; break; }
    if (identity) return "identity";
    for (int k = 0; k < n; ++k) {
        if (p == rho(g, k)) return "rho " + std::to_string(k);
        if (p == delta(g, k)) return "delta " + std::to_string(k);
    }
    if (p == gamma(g)) return "gamma";
    return "composite";
}

}  // namespace

AutGroup aut_group(const Graph& g) {
    int n = require_petersen(g, "aut_group");
    if (g.petersen_k() != 1 || n % 2 == 0 || n < 3 || n > 13)
        throw InvalidArgument("aut_group covers odd prisms P(n,1), 3 <= n <= 13");
    std::vector<Permutation> gens{rho(g, 1), delta(g, 0), gamma(g)};
    std::set<std::vector<int>> seen;
    std::vector<Permutation> elements;
    std::vector<int> ident(2 * n);
    for (int i = 0; i < 2 * n; ++i) ident[i] = i;
    elements.push_back(make_permutation(g, ident));
    seen.insert(elements[0].images);
    for (std::size_t qi = 0; qi < elements.size(); ++qi) {
        Permutation base = elements[qi];
        for (const Permutation& gen : gens) {
            // Apply base first, then gen.
            std::vector<int> comp(2 * n);
            for (int v = 0; v < 2 * n; ++v) comp[v] = gen.images[base.images[v]];
            if (seen.insert(comp).second)
                elements.push_back(make_permutation(g, std::move(comp)));
        }
    }
    std::sort(elements.begin(), elements.end());
    AutGroup grp{std::move(elements), {}};
    grp.generator_tags.reserve(grp.elements.size());
    for (const Permutation& p : grp.elements)
        grp.generator_tags.push_back(tag_of(g, p));
    return grp;
}

namespace {

struct BruteForce {
    const Graph& g;
    std::vector<Permutation>& out;
    std::vector<int> img;
    std::vector<char> used;

    void search(int v) {
        int V = g.vertex_count();
        if (v == V) {
            out.push_back(make_permutation(g, img));
            return;
        }
        for (int w = 0; w < V; ++w) {
            if (used[w] || g.neighbors(w).size() != g.neighbors(v).size())
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if ((g.find_edge(u, v) >= 0) != (g.find_edge(img[u], w) >= 0))
                    ok = false;
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            search(v + 1);
            used[w] = 0;
        }
    }
};

}  // namespace

std::vector<Permutation> brute_force_automorphisms(const Graph& g) {
    if (g.vertex_count() > 20)
        throw CapExceeded("brute_force_automorphisms handles at most 20 vertices");
    std::vector<Permutation> result;
    BruteForce bf{g, result, std::vector<int>(g.vertex_count(), -1),
                  std::vector<char>(g.vertex_count(), 0)};
    bf.search(0);
    std::sort(result.begin(), result.end());
    return result;
}

Signature apply_to_signature(const Permutation& p, const Signature& sig) {
    if (static_cast<int>(p.edge_map.size()) != sig.width)
        throw InvalidArgument("permutation does not act on this signature's graph");
    std::uint64_t mask = sig.mask, out = 0;
    while (mask) {
        int e = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << p.edge_map[e];
    }
    return {out, sig.width};
}

ClassId act_on_class(const Graph& g, const SpanningTree& tree,
                     const Permutation& p, ClassId id) {
    Signature rep = class_representative(g, tree, id);
    return tree_normalize(g, tree, apply_to_signature(p, rep)).first;
}

}  // namespace gpg
