#include "gpg/classify.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <set>
#include <thread>

#include "gpg/atlas.hpp"

namespace gpg {

int CheckReport::pass_count() const {
    int n = 0;
    for (const CheckLine& l : lines) n += l.ok;
    return n;
}

std::vector<ClassId> enumerate_classes(const Graph& g) {
    SpanningTree t = spanning_tree(g);
    int L = static_cast<int>(t.cotree_order.size());
    if (L > kMaxCotreeRank)
        throw CapExceeded("class space rank " + std::to_string(L) +
                          " exceeds bound " + std::to_string(kMaxCotreeRank));
    std::vector<ClassId> ids;
    ids.reserve(std::size_t{1} << L);
    for (std::uint32_t v = 0; v < (std::uint32_t{1} << L); ++v)
        ids.push_back({v, L});
    return ids;
}

namespace {

// One row per group element: class index -> image class index.
std::vector<std::vector<std::uint32_t>> action_tables(const Graph& g,
                                                      const SpanningTree& tree,
                                                      const AutGroup& grp) {
    int L = static_cast<int>(tree.cotree_order.size());
    std::uint32_t n_classes = std::uint32_t{1} << L;
    std::vector<std::vector<std::uint32_t>> tables(grp.elements.size());
    for (std::size_t pi = 0; pi < grp.elements.size(); ++pi) {
        auto& row = tables[pi];
        row.resize(n_classes);
        for (std::uint32_t c = 0; c < n_classes; ++c)
            row[c] = act_on_class(g, tree, grp.elements[pi], {c, L}).value;
    }
    return tables;
}

}  // namespace

std::vector<OrbitRecord> orbit_partition(const Graph& g, const AutGroup& grp) {
    SpanningTree tree = spanning_tree(g);
    int L = static_cast<int>(tree.cotree_order.size());
    if (L > kMaxCotreeRank)
        throw CapExceeded("class space rank " + std::to_string(L) +
                          " exceeds bound " + std::to_string(kMaxCotreeRank));
    std::uint32_t n_classes = std::uint32_t{1} << L;
    auto tables = action_tables(g, tree, grp);

    std::vector<std::int32_t> orbit_of(n_classes, -1);
    std::vector<OrbitRecord> orbits;
    for (std::uint32_t c0 = 0; c0 < n_classes; ++c0) {
        if (orbit_of[c0] >= 0) continue;
        int oid = static_cast<int>(orbits.size());
        std::vector<std::uint32_t> members{c0};
        orbit_of[c0] = oid;
        for (std::size_t qi = 0; qi < members.size(); ++qi)
            for (const auto& row : tables) {
                std::uint32_t img = row[members[qi]];
                if (orbit_of[img] < 0) {
                    orbit_of[img] = oid;
                    members.push_back(img);
                }
            }
        std::sort(members.begin(), members.end());
        OrbitRecord rec;
        rec.orbit_id = oid;
        rec.class_ids.reserve(members.size());
        for (std::uint32_t m : members) rec.class_ids.push_back({m, L});
        orbits.push_back(std::move(rec));
    }

    // Burnside cross-check: the direct count must equal the average number
    // of classes fixed per group element.
    std::uint64_t fixed_total = 0;
    for (const auto& row : tables)
        for (std::uint32_t c = 0; c < n_classes; ++c) fixed_total += row[c] == c;
    if (fixed_total % grp.elements.size() != 0 ||
        fixed_total / grp.elements.size() != orbits.size())
        throw Error("internal: Burnside count disagrees with direct orbit count");
    return orbits;
}

namespace {

template <typename Fn>
void parallel_over(std::size_t count, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::size_t>(jobs, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

std::uint32_t spot_check_member(std::uint64_t seed, const OrbitRecord& orbit) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (orbit.orbit_id + 1));
    std::size_t idx = 1 + rng() % (orbit.class_ids.size() - 1);
    return orbit.class_ids[idx].value;
}

}  // namespace

std::vector<ClassRecord> build_class_records(const Graph& g,
                                             const std::vector<Cycle>& cycles,
                                             const AutGroup& grp,
                                             std::vector<OrbitRecord>& orbits,
                                             int jobs,
                                             std::uint64_t spot_check_seed) {
    SpanningTree tree = spanning_tree(g);
    std::vector<ClassRecord> records(orbits.size());
    std::vector<std::string> failures(orbits.size());
    parallel_over(orbits.size(), jobs, [&](std::size_t oi) {
        OrbitRecord& orbit = orbits[oi];
        Signature rep = class_representative(g, tree, orbit.class_ids.front());
        MinimalResult min = minimal_signature(g, rep);
        orbit.min_size = min.size;
        orbit.profile = neg_profile(g, cycles, rep);
        // Orbit-wide canonical witness: the smallest group image of any
        // minimal witness of the representative class. The group maps this
        // class's witness set onto each member class's witness set, so the
        // minimum over images equals the minimum over the whole orbit.
        Signature canon = min.witnesses.front();
        for (const Permutation& p : grp.elements)
            for (const Signature& w : min.witnesses)
                canon = std::min(canon, apply_to_signature(p, w));
        orbit.canonical_rep = canon;
        // Minimal size is a switching-isomorphism invariant; re-derive it on
        // one other member class to guard against action/table bugs.
        if (orbit.class_ids.size() > 1) {
            std::uint32_t other = spot_check_member(spot_check_seed, orbit);
            Signature other_rep =
                class_representative(g, tree, {other, orbit.class_ids[0].length});
            MinimalResult check = minimal_signature(g, other_rep, false);
            if (check.size != min.size)
                failures[oi] = "orbit " + std::to_string(orbit.orbit_id) +
                               ": minimal size differs across members (" +
                               std::to_string(min.size) + " vs " +
                               std::to_string(check.size) + ")";
        }
        records[oi] = {orbit.class_ids.front(), min.size,
                       std::move(min.witnesses), orbit.profile};
    });
    for (const std::string& f : failures)
        if (!f.empty()) throw Error("internal: " + f);
    return records;
}

std::vector<Signature> enumerate_matchings(const Graph& g, int size) {
    if (size < 0 || size > g.vertex_count() / 2)
        throw InvalidArgument("matching size must be in [0, V/2]");
    std::vector<Signature> result;
    struct Frame {
        std::vector<Signature>& out;
        const Graph& g;
        int size;
        void rec(int start, int left, std::uint64_t mask, std::uint32_t used) {
            if (left == 0) {
                out.push_back({mask, g.edge_count()});
                return;
            }
            for (int e = start; e <= g.edge_count() - left; ++e) {
                auto [a, b] = g.edge(e);
                std::uint32_t ends =
                    (std::uint32_t{1} << a) | (std::uint32_t{1} << b);
                if (used & ends) continue;
                rec(e + 1, left - 1, mask | (std::uint64_t{1} << e), used | ends);
            }
        }
    } frame{result, g, size};
    frame.rec(0, size, 0, 0);
    // The recursion yields lexicographic-by-lowest-edge order; the contract
    // is numeric mask order.
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

struct ForbiddenFixture {
    const char* sigma;
    const char* resign_at;
};

// The seven size-3 matchings of P(7,1) that reduce to size <= 2 after one
// switch, with the vertex sets that realize the reduction.
constexpr ForbiddenFixture kForbidden[] = {
    {"u0-u1,v0-v1,u2-v2", "u1,v1,v2"},
    {"u0-u1,u2-u3,v1-v2", "u1,v2,u2"},
    {"u0-u1,v1-v2,v4-v5", "u1,v2,u2,u3,u4,v3,v4"},
    {"u0-u1,u3-u4,v0-v1", "u1,v1,u2,v2,v3,u3"},
    {"u0-u1,u3-u4,v0-v6", "v0,u1,v1,u2,v2,u3,v3"},
    {"v2-v3,u0-v0,u1-v1", "v1,v2,v0"},
    {"u0-v0,u1-v1,u2-v2", "u0,u1,u2"},
};

SwitchSet parse_vertex_set(const Graph& g, const std::string& text) {
    std::uint32_t mask = 0;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.label(v) == token) {
                mask |= std::uint32_t{1} << v;
                token.clear();
                return;
            }
        throw InvalidArgument("unknown vertex label '" + token + "'");
    };
    for (char c : text) {
        if (c == ',') flush();
        else if (!isspace(static_cast<unsigned char>(c))) token += c;
    }
    flush();
    return {mask, g.vertex_count()};
}

}  // namespace

std::vector<Signature> forbidden_sigmas(const Graph& g) {
    if (g.petersen_n() != 7 || g.petersen_k() != 1)
        throw InvalidArgument("the forbidden matchings are defined on P(7,1)");
    std::vector<Signature> out;
    for (const auto& f : kForbidden) out.push_back(parse_signature(f.sigma, g));
    return out;
}

MatchingCensus matching_aut_orbits(const Graph& g, const AutGroup& grp, int size,
                                   bool exclude_forbidden,
                                   bool with_switching_count, int jobs) {
    std::vector<Signature> matchings = enumerate_matchings(g, size);

    std::set<std::uint64_t> dropped;
    if (exclude_forbidden) {
        std::vector<Signature> sigmas = forbidden_sigmas(g);  // validates graph
        std::set<std::uint64_t> images;
        for (const Signature& s : sigmas)
            for (const Permutation& p : grp.elements)
                images.insert(apply_to_signature(p, s).mask);
        for (const Signature& m : matchings) {
            if (size == 4) {
                for (std::uint64_t img : images)
                    if ((m.mask & img) == img) {
                        dropped.insert(m.mask);
                        break;
                    }
            } else if (images.count(m.mask)) {
                dropped.insert(m.mask);
            }
        }
    }

    MatchingCensus census;
    census.size = size;
    census.excluded_forbidden = exclude_forbidden;
    std::set<std::uint64_t> seen;
    for (const Signature& m : matchings) {
        if (seen.count(m.mask) || dropped.count(m.mask)) continue;
        ++census.aut_orbit_count;
        for (const Permutation& p : grp.elements)
            seen.insert(apply_to_signature(p, m).mask);
    }
    if (with_switching_count)
        census.switching_iso_count = matching_class_count(g, grp, size, jobs);
    return census;
}

namespace {

std::vector<int> orbit_min_sizes(const Graph& g,
                                 const std::vector<OrbitRecord>& orbits,
                                 int jobs) {
    SpanningTree tree = spanning_tree(g);
    std::vector<int> sizes(orbits.size(), 0);
    parallel_over(orbits.size(), jobs, [&](std::size_t oi) {
        Signature rep = class_representative(g, tree, orbits[oi].class_ids.front());
        sizes[oi] = minimal_signature(g, rep, false).size;
    });
    return sizes;
}

}  // namespace

int matching_class_count(const Graph& g, const AutGroup& grp, int size,
                         int jobs) {
    std::vector<OrbitRecord> orbits = orbit_partition(g, grp);
    std::vector<int> sizes = orbit_min_sizes(g, orbits, jobs);
    return static_cast<int>(std::count(sizes.begin(), sizes.end(), size));
}

int max_minimal_size(const Graph& g, const AutGroup& grp, int jobs) {
    std::vector<OrbitRecord> orbits = orbit_partition(g, grp);
    std::vector<int> sizes = orbit_min_sizes(g, orbits, jobs);
    return *std::max_element(sizes.begin(), sizes.end());
}

CheckReport verify_forbidden() {
    Graph g = build_petersen(7, 1);
    SpanningTree tree = spanning_tree(g);
    CheckReport report;
    int j = 0;
    for (const auto& f : kForbidden) {
        ++j;
        Signature sigma = parse_signature(f.sigma, g);
        SwitchSet at = parse_vertex_set(g, f.resign_at);
        Signature reduced = apply_switch(g, sigma, at);
        bool ok = reduced.size() <= 2 && switching_equivalent(g, tree, sigma, reduced);
        report.lines.push_back(
            {"reduction " + std::to_string(j) + ": {" + f.sigma +
                 "} resigned at {" + f.resign_at + "} -> size " +
                 std::to_string(reduced.size()),
             ok});
    }
    return report;
}

namespace {

struct ResignFixture {
    int n;                   // graph P(n, 1)
    const char* source;
    const char* resign_at;
    const char* target;      // "" = all-positive
};

// Published one-switch reductions between matchings (source resigned at the
// listed vertices should land in the automorphism orbit of target).
constexpr ResignFixture kResignings[] = {
    {3, "u0-v0,u1-v1", "u0,u1,u2", "u0-v0"},
    {3, "u1-u2,v1-v2,u0-v0", "u1,v1,v0", "u0-u1,v1-v2"},
    {3, "u0-v0,u1-v1,u2-v2", "u0,u1,u2", ""},
    {5, "u0-v0,u1-v1", "u0,u1", "u0-u1,u2-u3"},
    {5, "u0-u1,u2-u3,v0-v1", "u1,u2,v1,v2", "u0-u1"},
    {5, "u0-u1,u2-u3,v1-v2", "u1,u2,v1", "u0-u1,u2-v2"},
    {5, "u0-u1,u2-u3,v3-v4", "u1,v1,u2,v2,v3", "u0-u1,u3-v3"},
    {5, "u1-u2,u3-u4,u0-v0", "u0,u1,u4", "u0-v0,u2-v2"},
    {5, "u1-u2,v1-v2,u0-v0", "u0,u1,v1", "u0-u1,v1-v2"},
    {5, "u2-u3,v2-v3,u0-v0", "u0,u1,u2,v1,v2", "u0-u1,v1-v2"},
    {5, "u2-u3,u0-v0,u1-v1", "u1,u2,u0", "u0-u1,u3-v3"},
    {5, "u0-v0,u1-v1,u2-v2", "u0,u1,u2", "u0-u1,u2-u3"},
    {5, "u0-v0,u1-v1,u3-v3", "u0,u1,u2,u3,u4", "u0-v0,u2-v2"},
    {5, "u0-u1,u2-u3,v0-v1,v2-v3", "u1,v1,u2,v2", ""},
    {5, "u0-u1,u2-u3,v0-v1,v3-v4", "u1,u2,v1,v2,v3", "u0-v0"},
    {5, "u0-u1,u2-u3,v1-v2,v3-v4", "u1,u2,v2,v3", "u0-u1,u2-v2"},
    {5, "u1-u2,u3-u4,v1-v2,u0-v0", "u0,u1,u4,v0,v1,v4", "u0-u1,u2-v2"},
    {5, "u1-u2,u3-u4,v2-v3,u0-v0", "u0,u1,u4", "u3-u4,u0-v0,u2-v2"},
    {5, "u2-u3,v2-v3,u0-v0,u1-v1", "u0,u1,u2,v2", "u0-u1,v2-v3"},
    {5, "u2-u3,v3-v4,u0-v0,u1-v1", "u0,u1,u2", "u1-u2,v2-v3,u0-v0"},
    {5, "u3-u4,v3-v4,u0-v0,u2-v2", "u3,v2,v3", "u1-u2,v2-v3,u0-v0"},
    {5, "u3-u4,u0-v0,u1-v1,u2-v2", "u0,u1,u2,u4", "u0-u1,u2-v2"},
    {5, "u0-v0,u1-v1,u2-v2,u3-v3", "u0,u1,u2,u3,u4", "u0-v0"},
    {5, "u1-u2,u3-u4,v1-v2,v3-v4,u0-v0", "v2,u2,u3,v3", "u0-v0"},
    {5, "u3-u4,v3-v4,u0-v0,u1-v1,u2-v2", "u0,u1,u2,u3,v3", "u0-u1,v2-v3"},
    {5, "u0-v0,u1-v1,u2-v2,u3-v3,u4-v4", "u0,u1,u2,u3,u4", ""},
    {7, "u0-v0,u1-v1", "u0,u1", "u0-u1,u2-u3"},
    {7, "u0-u1,u2-u3,v4-v5", "u1,v1,u2,v2", "u0-u1,u2-u3,u4-u5"},
    {7, "u0-u1,u3-u4,v5-v6", "u0,v0,u6,v6", "u0-u1,u2-u3,v4-v5"},
    {7, "u1-u2,u4-u5,u0-v0", "u1,u0", "u1-u2,u3-u4,u0-v0"},
    {7, "u1-u2,u5-u6,u0-v0", "u1,u0,u6", "u0-v0,u2-v2"},
    {7, "u1-u2,v4-v5,u0-v0", "u0,u1", "u1-u2,v3-v4,u0-v0"},
    {7, "u1-u2,v5-v6,u0-v0", "v1,v0,v6,u1", "u1-u2,v2-v3,u0-v0"},
    {7, "u2-u3,v5-v6,u0-v0", "v6,v0", "u1-u2,v3-v4,u0-v0"},
    {7, "u3-u4,v5-v6,u0-v0", "v6,v0", "u1-u2,v4-v5,u0-v0"},
    {7, "u3-u4,u0-v0,u1-v1", "u0,u1", "u0-u1,u2-u3,u4-u5"},
    {7, "u1-u2,u0-v0,u3-v3", "u2,u3", "u3-u4,u0-v0,u2-v2"},
    {7, "u0-v0,u1-v1,u3-v3", "u0,u1", "u1-u2,u3-u4,u0-v0"},
    {7, "u0-v0,u1-v1,u4-v4", "u0,u1", "u2-u3,u4-u5,u0-v0"},
    {7, "u1-u2,u3-u4,u5-u6,u0-v0", "u6,u0,u1", "u4-u5,u0-v0,u2-v2"},
    {7, "u1-u2,u3-u4,v5-v6,u0-v0", "u0,u1,u4,u5,u6,v4,v5", "u4-u5,u0-v0,u2-v2"},
    {7, "u1-u2,u5-u6,v3-v4,u0-v0", "u0,u1,u6", "u4-u5,u0-v0,u2-v2"},
    {7, "u3-u4,u5-u6,u0-v0,u2-v2", "u0,u1,u2,u3,u6,v4,v5", "u0-v0,u2-v2,u4-v4"},
    {7, "u4-u5,v5-v6,u0-v0,u2-v2", "u0,u5,u6,v5", "u1-u2,v4-v5,u0-v0,u3-v3"},
    {7, "u1-u2,u4-u5,u0-v0,u3-v3", "u0,u1", "u3-u4,u5-u6,u0-v0,u2-v2"},
    {7, "u1-u2,v4-v5,u0-v0,u3-v3", "u2,u3", "u3-u4,v5-v6,u0-v0,u2-v2"},
    {7, "u4-u5,v5-v6,u0-v0,u3-v3", "u4,v5,v4,v3", "u4-u5,v5-v6,u0-v0,u2-v2"},
};

}  // namespace

std::vector<std::vector<int>> reference_table(int N) {
    switch (N) {
        case 3:
            return {{0, 0}, {1, 1}, {0, 2}, {2, 0}, {2, 2}, {1, 3}};
        case 5:
            return {{0, 0, 0}, {1, 1, 2}, {2, 0, 2}, {0, 2, 0},
                    {2, 2, 2}, {2, 0, 4}, {3, 1, 2}, {2, 2, 4},
                    {3, 1, 4}, {4, 0, 2}, {4, 2, 2}, {5, 1, 0}};
        case 7:
            return {{0, 0, 0, 0}, {1, 2, 1, 3}, {2, 2, 0, 2}, {0, 0, 2, 0},
                    {2, 2, 2, 2}, {3, 2, 1, 3}, {2, 4, 0, 4}, {2, 4, 2, 4},
                    {3, 4, 1, 3}, {4, 2, 0, 4}, {2, 4, 0, 6}, {2, 4, 2, 6},
                    {3, 4, 1, 5}, {4, 4, 0, 2}, {3, 6, 1, 5}, {4, 4, 0, 4},
                    {4, 6, 0, 2}, {4, 2, 2, 4}, {4, 4, 2, 4}, {4, 4, 2, 2},
                    {4, 6, 2, 2}, {5, 2, 1, 5}, {5, 4, 1, 3}, {5, 4, 1, 1},
                    {6, 2, 0, 4}, {6, 2, 2, 4}, {7, 0, 1, 6}};
        default:
            throw InvalidArgument("no reference table for N = " +
                                  std::to_string(N));
    }
}

std::map<int, int> reference_matching_counts(int N) {
    switch (N) {
        case 3: return {{1, 2}, {2, 4}, {3, 2}};
        case 5: return {{1, 2}, {2, 8}, {3, 11}, {4, 10}, {5, 3}};
        case 7: return {{2, 12}};
        default:
            throw InvalidArgument("no reference matching counts for N = " +
                                  std::to_string(N));
    }
}

CheckReport replay_resignings() {
    CheckReport report;
    int current_n = 0;
    Graph g = build_petersen(3, 1);
    AutGroup grp;
    for (const auto& fx : kResignings) {
        if (fx.n != current_n) {
            current_n = fx.n;
            g = build_petersen(fx.n, 1);
            grp = aut_group(g);
        }
        Signature source = parse_signature(fx.source, g);
        Signature target = parse_signature(fx.target, g);
        SwitchSet at = parse_vertex_set(g, fx.resign_at);
        Signature switched = apply_switch(g, source, at);
        bool ok = false;
        for (const Permutation& p : grp.elements)
            if (apply_to_signature(p, switched) == target) {
                ok = true;
                break;
            }
        report.lines.push_back(
            {"P(" + std::to_string(fx.n) + ",1): {" + fx.source +
                 "} resigned at {" + fx.resign_at + "} vs target {" + fx.target +
                 "}",
             ok});
    }
    return report;
}

}  // namespace gpg
