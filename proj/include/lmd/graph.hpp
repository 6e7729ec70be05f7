#pragma once
// Immutable simple undirected graph, vertex sets, BFS distances and the
// product constructions (corona, join) everything else is built on.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lmd {

using Edge = std::pair<int, int>;  // stored normalized with first < second

class Graph {
public:
    Graph() = default;

    Graph(int order, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : order_(order), labels_(std::move(labels)) {
        if (order_ < 0) throw std::invalid_argument("graph order must be non-negative");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != order_)
            throw std::invalid_argument("label list must have one entry per vertex");
        for (auto& [u, v] : edges) {
            if (u == v) throw std::invalid_argument("self-loop not allowed");
            if (u < 0 || v < 0 || u >= order_ || v >= order_)
                throw std::invalid_argument("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("duplicate edge not allowed");
        edges_ = std::move(edges);
        adj_.assign(order_, {});
        for (const auto& [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return order_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    bool adjacent(int u, int v) const {
        const auto& nbrs = adj_.at(u);
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    bool has_labels() const { return !labels_.empty(); }

    std::string label(int v) const {
        if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    const std::vector<std::string>& labels() const { return labels_; }

private:
    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// Subset of vertices of a host graph of the given order.
struct VertexSet {
    std::vector<int> members;  // sorted, unique
    int universe = 0;

    VertexSet() = default;
    VertexSet(std::vector<int> m, int host_order) : members(std::move(m)), universe(host_order) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (int v : members)
            if (v < 0 || v >= universe)
                throw std::invalid_argument("vertex set member out of range");
    }

    int size() const { return static_cast<int>(members.size()); }
    bool empty() const { return members.empty(); }

    bool contains(int v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }

    std::string to_string() const {
        std::string out = "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(members[i]);
        }
        return out + "}";
    }

    bool operator==(const VertexSet& o) const {
        return universe == o.universe && members == o.members;
    }
};

inline constexpr int kUnreachable = -1;

struct DistanceMatrix {
    int order = 0;
    std::vector<int> dist;  // row-major, kUnreachable where no path exists

    int at(int u, int v) const { return dist[static_cast<size_t>(u) * order + v]; }
};

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::vector<int> queue;
    queue.reserve(g.order());
    dist[source] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix m;
    m.order = g.order();
    m.dist.reserve(static_cast<size_t>(g.order()) * g.order());
    for (int s = 0; s < g.order(); ++s) {
        auto row = bfs_distances(g, s);
        m.dist.insert(m.dist.end(), row.begin(), row.end());
    }
    return m;
}

// Vertices at distance exactly `radius` from a.
inline VertexSet neighborhood_shell(const Graph& g, int a, int radius) {
    if (a < 0 || a >= g.order()) throw std::invalid_argument("vertex out of range");
    auto dist = bfs_distances(g, a);
    std::vector<int> shell;
    for (int v = 0; v < g.order(); ++v)
        if (dist[v] == radius) shell.push_back(v);
    return VertexSet(std::move(shell), g.order());
}

// A dominates B: every vertex of B - A has a neighbor in A.
inline bool dominates(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : b.members) {
        if (a.contains(v)) continue;
        bool covered = false;
        for (int u : a.members)
            if (g.adjacent(u, v)) { covered = true; break; }
        if (!covered) return false;
    }
    return true;
}

// Corona G (x) H: one copy of G, |G| copies of H, vertex i of G joined to all
// of copy i. G occupies 0..n-1, copy i occupies n + i*n' .. n + (i+1)*n' - 1.
inline Graph corona(const Graph& g, const Graph& h) {
    if (g.order() < 1) throw std::invalid_argument("corona requires G of order >= 1");
    const int n = g.order();
    const int np = h.order();
    const int order = n * (1 + np);
    std::vector<Edge> edges = g.edges();
    edges.reserve(g.edge_count() + n * (h.edge_count() + np));
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    for (int i = 0; i < n; ++i) {
        const int base = n + i * np;
        for (const auto& [u, v] : h.edges()) edges.push_back({base + u, base + v});
        for (int j = 0; j < np; ++j) {
            edges.push_back({i, base + j});
            labels[base + j] = "h" + std::to_string(j) + "@copy" + std::to_string(i);
        }
    }
    return Graph(order, std::move(edges), std::move(labels));
}

// Join G + H: disjoint union plus every edge between the two sides. G first.
inline Graph join(const Graph& g, const Graph& h) {
    const int n = g.order();
    const int order = n + h.order();
    std::vector<Edge> edges = g.edges();
    edges.reserve(g.edge_count() + h.edge_count() + n * h.order());
    std::vector<std::string> labels(order);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    for (int j = 0; j < h.order(); ++j) labels[n + j] = "h" + std::to_string(j);
    for (const auto& [u, v] : h.edges()) edges.push_back({n + u, n + v});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < h.order(); ++j) edges.push_back({i, n + j});
    return Graph(order, std::move(edges), std::move(labels));
}

// K1 + H with the apex as the last vertex, so H keeps its own indexing.
inline Graph apex_join(const Graph& h) {
    const int np = h.order();
    std::vector<Edge> edges = h.edges();
    edges.reserve(h.edge_count() + np);
    std::vector<std::string> labels(np + 1);
    for (int j = 0; j < np; ++j) {
        edges.push_back({j, np});
        labels[j] = h.label(j);
    }
    labels[np] = "apex";
    return Graph(np + 1, std::move(edges), std::move(labels));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.push_back({a.order() + u, a.order() + v});
    return Graph(a.order() + b.order(), std::move(edges));
}

// Subgraph induced by the given vertices, reindexed to 0..k-1 in sorted order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> index(g.order(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.push_back({index[u], index[v]});
    return Graph(static_cast<int>(sorted.size()), std::move(edges));
}

}  // namespace lmd
