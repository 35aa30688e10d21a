#include "gpg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

namespace gpg {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
             std::vector<std::string> labels)
    : v_(vertex_count), edges_(std::move(edge_list)), labels_(std::move(labels)) {
    if (v_ < 1 || v_ > 32)
        throw InvalidArgument("vertex count must be in [1, 32], got " +
                              std::to_string(v_));
    if (edges_.size() > 64)
        throw InvalidArgument("edge count must be <= 64, got " +
                              std::to_string(edges_.size()));
    if (labels_.empty()) {
        labels_.reserve(v_);
        for (int i = 0; i < v_; ++i) labels_.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels_.size()) != v_)
        throw InvalidArgument("label count does not match vertex count");
    adj_.assign(v_, {});
    cut_.assign(v_, 0);
    for (int e = 0; e < edge_count(); ++e) {
        auto [a, b] = edges_[e];
        if (a < 0 || a >= v_ || b < 0 || b >= v_)
            throw InvalidArgument("edge " + std::to_string(e) +
                                  " has an endpoint outside the vertex range");
        if (a == b)
            throw InvalidArgument("edge " + std::to_string(e) + " is a loop");
        if (find_edge(a, b) >= 0)
            throw InvalidArgument("duplicate edge " + std::to_string(a) + "-" +
                                  std::to_string(b));
        adj_[a].emplace_back(b, e);
        adj_[b].emplace_back(a, e);
        cut_[a] |= std::uint64_t{1} << e;
        cut_[b] |= std::uint64_t{1} << e;
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::find_edge(int a, int b) const {
    for (auto [nb, e] : adj_[a])
        if (nb == b) return e;
    return -1;
}

namespace {

// Label order for edge names: letter prefix first, then numeric suffix by
// value, so "u9" sorts before "u10" (plain string compare would not).
bool label_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && !isdigit(static_cast<unsigned char>(a[i]))) ++i;
    while (j < b.size() && !isdigit(static_cast<unsigned char>(b[j]))) ++j;
    if (a.compare(0, i, b, 0, j) != 0) return a.compare(0, i, b, 0, j) < 0;
    long na = i < a.size() ? std::stol(a.substr(i)) : -1;
    long nb = j < b.size() ? std::stol(b.substr(j)) : -1;
    if (na != nb) return na < nb;
    return a < b;
}

}  // namespace

std::string Graph::edge_name(int e) const {
    auto [a, b] = edges_[e];
    const std::string &la = labels_[a], &lb = labels_[b];
    bool swap = label_less(lb, la);
    return (swap ? lb : la) + "-" + (swap ? la : lb);
}

std::uint64_t Graph::all_edges_mask() const {
    int m = edge_count();
    return m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
}

Graph build_petersen(int n, int k) {
    if (n < 3) throw InvalidArgument("build_petersen requires n >= 3");
    if (k < 1 || 2 * k >= n)
        throw InvalidArgument("build_petersen requires 1 <= k and 2k < n");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(n + i, n + (i + k) % n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    std::vector<std::string> labels;
    labels.reserve(2 * n);
    for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
    for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    Graph g(2 * n, std::move(edges), std::move(labels));
    g.pn_ = n;
    g.pk_ = k;
    return g;
}

namespace {

// DFS over paths anchored at the smallest cycle vertex; each cycle is
// reported once by requiring the second path vertex below the last one.
struct CycleSearch {
    const Graph& g;
    int cap;
    std::vector<Cycle>& out;
    std::vector<int> path;
    std::vector<char> on_path;
    int root = 0;

    void run() {
        on_path.assign(g.vertex_count(), 0);
        for (root = 0; root < g.vertex_count(); ++root) {
            path = {root};
            on_path[root] = 1;
            extend(root, 0);
            on_path[root] = 0;
        }
    }

    void extend(int cur, std::uint64_t edges) {
        for (auto [nb, e] : g.neighbors(cur)) {
            if (nb == root && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (static_cast<int>(out.size()) >= cap)
                        throw CapExceeded("cycle count exceeds cap " +
                                          std::to_string(cap));
                    out.push_back({static_cast<int>(path.size()),
                                   edges | (std::uint64_t{1} << e), path});
                }
            } else if (nb > root && !on_path[nb]) {
                on_path[nb] = 1;
                path.push_back(nb);
                extend(nb, edges | (std::uint64_t{1} << e));
                path.pop_back();
                on_path[nb] = 0;
            }
        }
    }
};

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.vertex_count(), -1);
    dist[source] = 0;
    std::vector<int> frontier{source};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (auto [nb, e] : g.neighbors(x)) {
                (void)e;
                if (dist[nb] < 0) {
                    dist[nb] = dist[x] + 1;
                    next.push_back(nb);
                }
            }
        frontier = std::move(next);
    }
    return dist;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g, int cap) {
    std::vector<Cycle> cycles;
    CycleSearch{g, cap, cycles, {}, {}, 0}.run();
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        return a.length != b.length ? a.length < b.length
                                    : a.edge_mask < b.edge_mask;
    });
    return cycles;
}

std::map<int, int> cycle_census(const std::vector<Cycle>& cycles) {
    std::map<int, int> census;
    for (const Cycle& c : cycles) ++census[c.length];
    return census;
}

int edge_distance(const Graph& g, int e1, int e2) {
    if (e1 == e2)
        throw InvalidArgument("edge_distance requires two distinct edges");
    auto [a, b] = g.edge(e1);
    auto [c, d] = g.edge(e2);
    auto da = bfs_distances(g, a), db = bfs_distances(g, b);
    int best = std::min({da[c], da[d], db[c], db[d]});
    return 1 + best;
}

int max_edge_distance(const Graph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) dist.push_back(bfs_distances(g, v));
    int best = 0;
    for (int e1 = 0; e1 < g.edge_count(); ++e1)
        for (int e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
            auto [a, b] = g.edge(e1);
            auto [c, d] = g.edge(e2);
            int dd = 1 + std::min({dist[a][c], dist[a][d], dist[b][c], dist[b][d]});
            best = std::max(best, dd);
        }
    return best;
}

SpanningTree spanning_tree(const Graph& g) {
    SpanningTree t;
    int V = g.vertex_count();
    t.parent_edge.assign(V, -1);
    t.parent_vertex.assign(V, -1);
    std::vector<char> seen(V, 0);
    seen[0] = 1;
    t.bfs_order.push_back(0);
    for (std::size_t qi = 0; qi < t.bfs_order.size(); ++qi) {
        int x = t.bfs_order[qi];
        for (auto [nb, e] : g.neighbors(x))
            if (!seen[nb]) {
                seen[nb] = 1;
                t.parent_edge[nb] = e;
                t.parent_vertex[nb] = x;
                t.tree_mask |= std::uint64_t{1} << e;
                t.bfs_order.push_back(nb);
            }
    }
    if (static_cast<int>(t.bfs_order.size()) != V)
        throw InvalidArgument("spanning_tree requires a connected graph");
    for (int e = 0; e < g.edge_count(); ++e)
        if (!(t.tree_mask >> e & 1)) t.cotree_order.push_back(e);
    return t;
}

}  // namespace gpg
