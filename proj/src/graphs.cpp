#include "corrgraph/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace corrgraph {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& undirected_edges) : n_(n) {
    if (n <= 0) throw std::invalid_argument("Graph: vertex count must be positive");
    adj_.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : undirected_edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
        adj_[u][v] = adj_[v][u] = 1;
    }
    nbrs_.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (adj_[v][w]) {
                edges_.emplace_back(v, w);
                nbrs_[v].push_back(w);
                if (v < w) undirected_.emplace_back(v, w);
            }
}

bool Graph::adjacent(int v, int w) const {
    if (v < 0 || w < 0 || v >= n_ || w >= n_)
        throw std::out_of_range("Graph::adjacent: vertex out of range");
    return adj_[v][w] != 0;
}

Graph make_named(const std::string& name, int n) {
    if (name == "complete") {
        if (n < 3) throw std::invalid_argument("make_named: complete graph needs n >= 3");
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w) e.emplace_back(v, w);
        Graph g(n, e);
        g.set_name("complete:" + std::to_string(n));
        return g;
    }
    if (name == "cycle") {
        if (n < 3) throw std::invalid_argument("make_named: cycle graph needs n >= 3");
        std::vector<std::pair<int, int>> e;
        for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
        Graph g(n, e);
        g.set_name("cycle:" + std::to_string(n));
        return g;
    }
    if (name == "petersen") {
        // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 5; ++i) {
            e.emplace_back(i, (i + 1) % 5);
            e.emplace_back(i, i + 5);
            e.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        Graph g(10, e);
        g.set_name("petersen");
        return g;
    }
    throw std::invalid_argument("make_named: unknown graph name '" + name + "'");
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_edge_list: cannot open '" + path + "'");
    std::vector<std::pair<int, int>> e;
    int max_vertex = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) throw std::invalid_argument("load_edge_list: malformed line '" + line + "'");
        if (u < 0 || v < 0) throw std::invalid_argument("load_edge_list: negative vertex id");
        e.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    if (max_vertex < 0) throw std::invalid_argument("load_edge_list: no edges in '" + path + "'");
    Graph g(max_vertex + 1, e);
    g.set_name(path);
    return g;
}

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string head = spec.substr(0, colon);
        if (head == "complete" || head == "cycle") {
            int n = 0;
            try {
                n = std::stoi(spec.substr(colon + 1));
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_graph_spec: bad size in '" + spec + "'");
            }
            return make_named(head, n);
        }
    }
    if (spec == "petersen") return make_named("petersen");
    return load_edge_list(spec);
}

namespace {

void extend_automorphism(const Graph& g, std::vector<int>& perm, std::vector<char>& used, int depth,
                         std::vector<std::vector<int>>& out, std::size_t limit) {
    const int n = g.vertex_count();
    if (depth == n) {
        out.push_back(perm);
        if (out.size() > limit)
            throw std::runtime_error("automorphisms: group too large to enumerate");
        return;
    }
    for (int image = 0; image < n; ++image) {
        if (used[image]) continue;
        if (g.degree(depth) != g.degree(image)) continue;
        bool ok = true;
        for (int prev = 0; prev < depth && ok; ++prev)
            if (g.adjacent(depth, prev) != g.adjacent(image, perm[prev])) ok = false;
        if (!ok) continue;
        perm[depth] = image;
        used[image] = 1;
        extend_automorphism(g, perm, used, depth + 1, out, limit);
        used[image] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("automorphisms: n > 12 is out of enumeration range");
    std::vector<std::vector<int>> out;
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    extend_automorphism(g, perm, used, 0, out, 2'000'000);
    return out;
}

bool is_vertex_transitive(const Graph& g) {
    auto auts = automorphisms(g);
    const int n = g.vertex_count();
    std::vector<char> orbit(n, 0);
    for (const auto& p : auts) orbit[p[0]] = 1;
    return std::all_of(orbit.begin(), orbit.end(), [](char c) { return c != 0; });
}

bool is_edge_transitive(const Graph& g) {
    const auto& und = g.undirected_edges();
    if (und.empty()) return true;
    auto auts = automorphisms(g);
    std::set<std::pair<int, int>> orbit;
    auto [a, b] = und.front();
    for (const auto& p : auts) {
        int x = p[a], y = p[b];
        orbit.emplace(std::min(x, y), std::max(x, y));
    }
    return orbit.size() == und.size();
}

}  // namespace corrgraph
