#pragma once
// Small undirected simple graphs with a frozen edge numbering, generalized
// Petersen construction, simple-cycle enumeration and edge distances.
// Edges are addressed by index; edge subsets travel as 64-bit masks.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected inputs: bad parameters, malformed text, contract violations.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A configurable resource bound was exceeded (cycle cap, width bounds).
class CapExceeded : public Error {
public:
    using Error::Error;
};

class Graph {
public:
    // Generic simple graph; labels default to "0", "1", ...
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> labels = {});

    int vertex_count() const { return v_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    const std::string& label(int v) const { return labels_[v]; }
    // "u0-u1" style: u-endpoint before v-endpoint, else ascending index.
    std::string edge_name(int e) const;
    // (neighbor, edge index) pairs in ascending neighbor order.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
    // Index of the edge joining a and b, or -1.
    int find_edge(int a, int b) const;
    // Mask of edges incident to v.
    std::uint64_t vertex_cut(int v) const { return cut_[v]; }
    std::uint64_t all_edges_mask() const;

    // Generalized Petersen parameters when built by build_petersen, else (0,0).
    int petersen_n() const { return pn_; }
    int petersen_k() const { return pk_; }

private:
    friend Graph build_petersen(int n, int k);
    int v_;
    int pn_ = 0, pk_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::uint64_t> cut_;
};

// P(n, k) on 2n vertices u0..u{n-1}, v0..v{n-1}.
// Edge numbering is part of the external contract:
//   outer u_i u_{i+1} -> i, inner v_i v_{i+k} -> n+i, spoke u_i v_i -> 2n+i.
// Requires n >= 3, k >= 1, 2k < n.
Graph build_petersen(int n, int k);

struct Cycle {
    int length = 0;                 // >= 3
    std::uint64_t edge_mask = 0;    // popcount == length
    std::vector<int> vertices;      // closed walk, |vertices| == length
};

inline constexpr int kDefaultCycleCap = 65536;

// Every simple cycle exactly once, ordered by (length, edge mask ascending).
// Throws CapExceeded when the graph has more than `cap` cycles.
std::vector<Cycle> enumerate_cycles(const Graph& g, int cap = kDefaultCycleCap);

// length -> number of simple cycles of that length.
std::map<int, int> cycle_census(const std::vector<Cycle>& cycles);

// 1 + min distance between endpoint pairs; adjacent edges have distance 1.
// Throws InvalidArgument when e1 == e2.
int edge_distance(const Graph& g, int e1, int e2);

// Max of edge_distance over all unordered edge pairs.
int max_edge_distance(const Graph& g);

struct SpanningTree {
    std::uint64_t tree_mask = 0;       // V-1 tree edges
    std::vector<int> parent_edge;      // per vertex; -1 at the root
    std::vector<int> parent_vertex;    // per vertex; -1 at the root
    std::vector<int> bfs_order;        // root first
    std::vector<int> cotree_order;     // non-tree edges, ascending
};

// BFS tree rooted at vertex 0, neighbors visited in ascending order.
// Throws InvalidArgument on disconnected graphs.
SpanningTree spanning_tree(const Graph& g);

}  // namespace gpg
