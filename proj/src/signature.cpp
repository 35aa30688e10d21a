#include "gpg/signature.hpp"

#include <algorithm>
#include <bit>
#include <thread>

namespace gpg {

int Signature::size() const { return std::popcount(mask); }
int SwitchSet::size() const { return std::popcount(mask); }

std::string ClassId::to_string() const {
    std::string bits(length, '0');
    for (int i = 0; i < length; ++i)
        if (value >> (length - 1 - i) & 1) bits[i] = '1';
    return bits;
}

ClassId ClassId::from_string(const std::string& bits) {
    if (bits.empty() || bits.size() > 32)
        throw InvalidArgument("class bitstring must have 1..32 characters");
    ClassId id{0, static_cast<int>(bits.size())};
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw InvalidArgument("class bitstring may contain only 0 and 1");
        id.value = id.value << 1 | (c == '1');
    }
    return id;
}

Signature make_signature(const Graph& g, std::uint64_t mask) {
    if (mask & ~g.all_edges_mask())
        throw InvalidArgument("signature mask has bits outside the edge range");
    return {mask, g.edge_count()};
}

static void check_width(const Graph& g, const Signature& sig) {
    if (sig.width != g.edge_count())
        throw InvalidArgument("signature width " + std::to_string(sig.width) +
                              " does not match graph with " +
                              std::to_string(g.edge_count()) + " edges");
}

Signature apply_switch(const Graph& g, const Signature& sig, const SwitchSet& s) {
    check_width(g, sig);
    if (s.width != g.vertex_count())
        throw InvalidArgument("switch set width " + std::to_string(s.width) +
                              " does not match graph with " +
                              std::to_string(g.vertex_count()) + " vertices");
    std::uint64_t mask = sig.mask;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (s.mask >> v & 1) mask ^= g.vertex_cut(v);
    return {mask, sig.width};
}

int cycle_sign(const Signature& sig, const Cycle& cycle) {
    if (cycle.length < 3 ||
        std::popcount(cycle.edge_mask) != cycle.length ||
        (sig.width < 64 && (cycle.edge_mask >> sig.width) != 0))
        throw InvalidArgument("cycle does not belong to the signature's graph");
    return std::popcount(sig.mask & cycle.edge_mask) % 2 ? -1 : 1;
}

NegCycleProfile neg_profile(const Graph& g, const std::vector<Cycle>& cycles,
                            const Signature& sig) {
    check_width(g, sig);
    NegCycleProfile profile;
    for (const Cycle& c : cycles) {
        auto [it, unused] = profile.try_emplace(c.length, 0);
        (void)unused;
        if (std::popcount(sig.mask & c.edge_mask) & 1) ++it->second;
    }
    return profile;
}

bool is_balanced(const Graph& g, const SpanningTree& tree, const Signature& sig) {
    return tree_normalize(g, tree, sig).first.value == 0;
}

std::pair<ClassId, SwitchSet> tree_normalize(const Graph& g,
                                             const SpanningTree& tree,
                                             const Signature& sig) {
    check_width(g, sig);
    // Potential at the root is +1; each vertex gets its parent's potential
    // times the sign of its parent edge. Switching the negative-potential
    // vertices makes every tree edge positive.
    std::uint32_t switch_mask = 0;
    std::vector<char> negative(g.vertex_count(), 0);
    for (std::size_t i = 1; i < tree.bfs_order.size(); ++i) {
        int v = tree.bfs_order[i];
        bool edge_neg = sig.mask >> tree.parent_edge[v] & 1;
        negative[v] = negative[tree.parent_vertex[v]] ^ edge_neg;
        if (negative[v]) switch_mask |= std::uint32_t{1} << v;
    }
    SwitchSet s{switch_mask, g.vertex_count()};
    Signature canon = apply_switch(g, sig, s);
    int L = static_cast<int>(tree.cotree_order.size());
    ClassId id{0, L};
    for (int i = 0; i < L; ++i)
        if (canon.mask >> tree.cotree_order[i] & 1)
            id.value |= std::uint32_t{1} << (L - 1 - i);
    return {id, s};
}

Signature class_representative(const Graph& g, const SpanningTree& tree,
                               ClassId id) {
    int L = static_cast<int>(tree.cotree_order.size());
    if (id.length != L)
        throw InvalidArgument("class id length does not match the co-tree rank");
    std::uint64_t mask = 0;
    for (int i = 0; i < L; ++i)
        if (id.value >> (L - 1 - i) & 1)
            mask |= std::uint64_t{1} << tree.cotree_order[i];
    return {mask, g.edge_count()};
}

bool switching_equivalent(const Graph& g, const SpanningTree& tree,
                          const Signature& a, const Signature& b) {
    return tree_normalize(g, tree, a).first == tree_normalize(g, tree, b).first;
}

namespace {

struct ScanResult {
    int best;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> hits;  // (mask, switch)
};

// Walks switch subsets of vertices 1..V-1 in Gray-code order over one
// contiguous index range, so consecutive steps differ by one vertex cut.
ScanResult scan_range(const Graph& g, std::uint64_t sig_mask, std::uint32_t lo,
                      std::uint32_t hi, bool collect) {
    std::uint32_t start_gray = lo ^ (lo >> 1);
    std::uint64_t cur = sig_mask;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (start_gray >> (v - 1) & 1) cur ^= g.vertex_cut(v);
    ScanResult r{std::popcount(cur), {}};
    if (collect) r.hits.emplace_back(cur, start_gray << 1);
    std::uint32_t gray = start_gray;
    for (std::uint32_t idx = lo + 1; idx < hi; ++idx) {
        std::uint32_t next = idx ^ (idx >> 1);
        int flipped = std::countr_zero(gray ^ next);
        gray = next;
        cur ^= g.vertex_cut(flipped + 1);
        int c = std::popcount(cur);
        if (c < r.best) {
            r.best = c;
            r.hits.clear();
            if (collect) r.hits.emplace_back(cur, gray << 1);
        } else if (c == r.best && collect) {
            r.hits.emplace_back(cur, gray << 1);
        }
    }
    return r;
}

}  // namespace

MinimalResult minimal_signature(const Graph& g, const Signature& sig,
                                bool collect_witnesses, int jobs,
                                int max_vertices) {
    check_width(g, sig);
    int V = g.vertex_count();
    if (V > max_vertices)
        throw CapExceeded("minimal_signature bound: graph has " +
                          std::to_string(V) + " vertices, bound is " +
                          std::to_string(max_vertices));
    std::uint64_t total = std::uint64_t{1} << (V - 1);
    if (jobs < 1) jobs = 1;
    std::uint64_t chunk_count = std::min<std::uint64_t>(jobs, total);

    std::vector<ScanResult> parts(chunk_count);
    if (chunk_count == 1) {
        parts[0] = scan_range(g, sig.mask, 0, static_cast<std::uint32_t>(total),
                              collect_witnesses);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t per = total / chunk_count, extra = total % chunk_count;
        std::uint64_t begin = 0;
        for (std::uint64_t c = 0; c < chunk_count; ++c) {
            std::uint64_t end = begin + per + (c < extra ? 1 : 0);
            pool.emplace_back([&g, &sig, &parts, c, begin, end,
                               collect_witnesses] {
                parts[c] = scan_range(g, sig.mask,
                                      static_cast<std::uint32_t>(begin),
                                      static_cast<std::uint32_t>(end),
                                      collect_witnesses);
            });
            begin = end;
        }
        for (auto& th : pool) th.join();
    }

    int best = parts[0].best;
    for (const auto& p : parts) best = std::min(best, p.best);
    MinimalResult result;
    result.size = best;
    if (collect_witnesses) {
        std::vector<std::pair<std::uint64_t, std::uint32_t>> hits;
        for (auto& p : parts)
            if (p.best == best)
                hits.insert(hits.end(), p.hits.begin(), p.hits.end());
        // Each equivalent signature is reached by exactly one scanned subset
        // (the complementary subset contains vertex 0), so no deduplication:
        // just order witnesses ascending, ties broken by switch mask.
        std::sort(hits.begin(), hits.end());
        for (auto [mask, sw] : hits) {
            result.witnesses.push_back({mask, g.edge_count()});
            result.witness_switch.push_back({sw, V});
        }
    }
    return result;
}

bool is_matching(const Graph& g, const Signature& sig) {
    check_width(g, sig);
    std::uint64_t m = sig.mask;
    std::uint32_t seen = 0;
    while (m) {
        int e = std::countr_zero(m);
        m &= m - 1;
        auto [a, b] = g.edge(e);
        std::uint32_t ends = (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
        if (seen & ends) return false;
        seen |= ends;
    }
    return true;
}

}  // namespace gpg
