#pragma once

#include <string>
#include <utility>
#include <vector>

namespace corrgraph {

// Simple graph with the ordered-pair edge convention: every undirected edge
// {v,w} is stored as both (v,w) and (w,v), so edge_count() is twice the
// number of undirected edges. Vertices are 0-indexed. Instances are immutable
// after construction and safe to share between threads.
class Graph {
public:
    // Builds from a list of undirected edges; symmetrizes, deduplicates and
    // rejects loops and out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<int, int>>& undirected_edges);

    int vertex_count() const { return n_; }
    // Ordered count: twice the number of undirected edges.
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Sorted list of ordered pairs (v,w), v != w.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // Sorted list of undirected edges {v,w} with v < w.
    const std::vector<std::pair<int, int>>& undirected_edges() const { return undirected_; }
    bool adjacent(int v, int w) const;
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> undirected_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::string name_;
};

// Named constructors: "complete" (K_n, n >= 3), "cycle" (C_n, n >= 3),
// "petersen" (n is ignored). Throws std::invalid_argument otherwise.
Graph make_named(const std::string& name, int n = 0);

// Edge-list file: one "u v" line per undirected edge, 0-indexed, '#' starts a
// comment. The loader symmetrizes and deduplicates.
Graph load_edge_list(const std::string& path);

// "complete:5", "cycle:7", "petersen", or a path to an edge-list file.
Graph parse_graph_spec(const std::string& spec);

// All permutations pi of {0..n-1} with (v,w) in E iff (pi(v),pi(w)) in E,
// by backtracking over degree-compatible assignments. Throws for n > 12 or
// when the group is too large to materialize.
std::vector<std::vector<int>> automorphisms(const Graph& g);

// True iff Aut(G) acts transitively on vertices.
bool is_vertex_transitive(const Graph& g);
// True iff Aut(G) acts transitively on undirected edges. (For the synchronous
// correlation classes handled here edge values are symmetric in (v,w), so the
// undirected orbit is the relevant one; a path P_3 is edge- but not
// vertex-transitive under this convention.)
bool is_edge_transitive(const Graph& g);

}  // namespace corrgraph
