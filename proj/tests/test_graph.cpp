#include <bit>
#include <set>

#include "doctest.h"
#include "gpg/graph.hpp"

using namespace gpg;

namespace {

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

TEST_CASE("prism construction and edge layout") {
    Graph g = build_petersen(5, 1);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(g.petersen_n() == 5);
    CHECK(g.petersen_k() == 1);

    // Frozen layout: outer edge i = u_i u_{i+1}, inner edge n+i = v_i v_{i+1},
    // spoke 2n+i = u_i v_i.
    for (int i = 0; i < 5; ++i) {
        CHECK(g.edge(i) == std::pair<int, int>{i, (i + 1) % 5});
        CHECK(g.edge(5 + i) == std::pair<int, int>{5 + i, 5 + (i + 1) % 5});
        CHECK(g.edge(10 + i) == std::pair<int, int>{i, 5 + i});
    }
    CHECK(g.label(0) == "u0");
    CHECK(g.label(4) == "u4");
    CHECK(g.label(5) == "v0");
    CHECK(g.label(9) == "v4");
    CHECK(g.edge_name(0) == "u0-u1");
    CHECK(g.edge_name(4) == "u0-u4");
    CHECK(g.edge_name(9) == "v0-v4");
    CHECK(g.edge_name(10) == "u0-v0");

    CHECK(g.find_edge(0, 1) == 0);
    CHECK(g.find_edge(1, 0) == 0);
    CHECK(g.find_edge(0, 2) == -1);
    CHECK(g.find_edge(0, 5) == 10);
}

TEST_CASE("edge names order numeric suffixes by value") {
    Graph g = build_petersen(11, 1);
    CHECK(g.edge_name(9) == "u9-u10");    // not "u10-u9"
    CHECK(g.edge_name(10) == "u0-u10");
    CHECK(g.edge_name(20) == "v9-v10");
    CHECK(g.edge_name(31) == "u9-v9");
}

TEST_CASE("neighbors are sorted and cuts match incidence") {
    Graph g = build_petersen(7, 1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& nb = g.neighbors(v);
        CHECK(nb.size() == 3);  // cubic
        for (std::size_t i = 1; i < nb.size(); ++i)
            CHECK(nb[i - 1].first < nb[i].first);
        std::uint64_t cut = g.vertex_cut(v);
        CHECK(std::popcount(cut) == 3);
        for (auto [w, e] : nb) CHECK((cut >> e & 1) == 1);
    }
    CHECK(g.all_edges_mask() == (std::uint64_t{1} << 21) - 1);
}

TEST_CASE("graph validation rejects bad input") {
    CHECK_THROWS_AS(build_petersen(2, 1), InvalidArgument);
    CHECK_THROWS_AS(build_petersen(4, 2), InvalidArgument);  // needs 2k < n
    CHECK_THROWS_AS(build_petersen(17, 1), InvalidArgument); // 34 vertices
    CHECK_THROWS_AS(Graph(0, {}), InvalidArgument);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidArgument);          // loop
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidArgument);  // duplicate
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidArgument);          // range
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, {"a"}), InvalidArgument);   // label count
}

TEST_CASE("cycle enumeration matches the honest census") {
    auto census_of = [](int N) {
        Graph g = build_petersen(N, 1);
        return cycle_census(enumerate_cycles(g));
    };
    CHECK(census_of(3) == std::map<int, int>{{3, 2}, {4, 3}, {5, 6}, {6, 3}});
    CHECK(census_of(5) == std::map<int, int>{{4, 5},
                                             {5, 2},
                                             {6, 5},
                                             {7, 20},
                                             {8, 5},
                                             {9, 10},
                                             {10, 5}});
    int totals[] = {14, 52, 170, 584};
    int i = 0;
    for (int N : {3, 5, 7, 9}) {
        auto census = census_of(N);
        int total = 0;
        for (auto [len, cnt] : census) total += cnt;
        CHECK(total == totals[i++]);
    }
}

TEST_CASE("census closed form: ladders, rings, wrap cycles") {
    for (int N : {3, 5, 7, 9, 11, 13}) {
        Graph g = build_petersen(N, 1);
        auto census = cycle_census(enumerate_cycles(g));
        std::map<int, int> expected;
        for (int d = 1; d <= N - 1; ++d) expected[2 * d + 2] += N;
        for (int t = 0; 2 * t < N; ++t)
            expected[N + 2 * t] += static_cast<int>(2 * binom(N, 2 * t));
        CHECK(census == expected);
    }
}

TEST_CASE("cycles are simple, closed, and canonically ordered") {
    Graph g = build_petersen(5, 1);
    auto cycles = enumerate_cycles(g);
    std::set<std::uint64_t> masks;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const Cycle& c = cycles[i];
        CHECK(c.length == static_cast<int>(c.vertices.size()));
        CHECK(std::popcount(c.edge_mask) == c.length);
        std::uint64_t walk = 0;
        for (int j = 0; j < c.length; ++j) {
            int e = g.find_edge(c.vertices[j], c.vertices[(j + 1) % c.length]);
            REQUIRE(e >= 0);
            walk |= std::uint64_t{1} << e;
        }
        CHECK(walk == c.edge_mask);
        CHECK(!masks.count(c.edge_mask));
        masks.insert(c.edge_mask);
        if (i > 0) {
            bool ordered =
                cycles[i - 1].length < c.length ||
                (cycles[i - 1].length == c.length &&
                 cycles[i - 1].edge_mask < c.edge_mask);
            CHECK(ordered);
        }
    }
}

TEST_CASE("cycle cap aborts oversized enumerations") {
    Graph g = build_petersen(7, 1);
    CHECK_THROWS_AS(enumerate_cycles(g, 10), CapExceeded);
}

TEST_CASE("edge distance") {
    Graph g = build_petersen(3, 1);
    CHECK(edge_distance(g, 0, 1) == 1);            // share u1
    CHECK(edge_distance(g, 0, g.find_edge(4, 5)) == 2);
    CHECK_THROWS_AS(edge_distance(g, 2, 2), InvalidArgument);
    int expect[] = {2, 3, 4, 5};
    int i = 0;
    for (int N : {3, 5, 7, 9})
        CHECK(max_edge_distance(build_petersen(N, 1)) == expect[i++]);
}

TEST_CASE("spanning tree is a BFS tree rooted at vertex 0") {
    Graph g = build_petersen(7, 1);
    SpanningTree t = spanning_tree(g);
    CHECK(std::popcount(t.tree_mask) == g.vertex_count() - 1);
    CHECK(t.bfs_order.size() == static_cast<std::size_t>(g.vertex_count()));
    CHECK(t.bfs_order[0] == 0);
    CHECK(t.parent_vertex[0] == -1);
    CHECK(t.parent_edge[0] == -1);
    for (int v = 1; v < g.vertex_count(); ++v) {
        int e = t.parent_edge[v];
        REQUIRE(e >= 0);
        CHECK((t.tree_mask >> e & 1) == 1);
        CHECK(g.find_edge(v, t.parent_vertex[v]) == e);
    }
    CHECK(t.cotree_order.size() ==
          static_cast<std::size_t>(g.edge_count() - g.vertex_count() + 1));
    for (std::size_t i = 0; i < t.cotree_order.size(); ++i) {
        CHECK((t.tree_mask >> t.cotree_order[i] & 1) == 0);
        if (i > 0) CHECK(t.cotree_order[i - 1] < t.cotree_order[i]);
    }
    CHECK_THROWS_AS(spanning_tree(Graph(3, {{0, 1}})), InvalidArgument);
}
