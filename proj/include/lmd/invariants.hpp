#pragma once
// Structural invariants: connectivity, bipartition, radius/diameter/center,
// girth, clique number, plus the small-order isomorphism utilities used by
// the generators and the test catalogs.

#include <cstdint>
#include <map>
#include <numeric>

#include "lmd/graph.hpp"

namespace lmd {

struct StructuralInvariants {
    bool connected = false;
    std::vector<std::vector<int>> components;      // each sorted, ordered by least vertex
    std::optional<std::vector<int>> bipartition;   // color per vertex; least vertex of a component gets 0
    std::optional<int> radius;                     // absent when disconnected
    std::optional<int> diameter;
    VertexSet center;                              // empty when disconnected
    std::optional<int> girth;                      // absent for forests
    int clique_number = 0;
};

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int w : g.neighbors(comp[head]))
                if (!seen[w]) { seen[w] = 1; comp.push_back(w); }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return connected_components(g).size() == 1;
}

// Proper 2-coloring if one exists. Component coloring is fixed by giving the
// lowest-index vertex of each component color 0.
inline std::optional<std::vector<int>> bipartition_colors(const Graph& g) {
    std::vector<int> color(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition_colors(g).has_value(); }

// Shortest cycle length via BFS from every vertex; absent for forests.
inline std::optional<int> girth(const Graph& g) {
    int best = -1;
    for (int s = 0; s < g.order(); ++s) {
        std::vector<int> dist(g.order(), kUnreachable), parent(g.order(), -1);
        std::vector<int> queue{s};
        dist[s] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        for (const auto& [u, w] : g.edges()) {
            if (dist[u] == kUnreachable || dist[w] == kUnreachable) continue;
            if (parent[u] == w || parent[w] == u) continue;
            int cand = dist[u] + dist[w] + 1;
            if (best == -1 || cand < best) best = cand;
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

namespace detail {

inline void clique_dfs(const std::vector<uint64_t>& nbr, uint64_t cand, int size, int& best) {
    if (size + __builtin_popcountll(cand) <= best) return;
    while (cand) {
        uint64_t bit = cand & (~cand + 1);
        int v = __builtin_ctzll(cand);
        cand ^= bit;
        if (size + 1 + __builtin_popcountll(cand) <= best) return;
        if (size + 1 > best) best = size + 1;
        clique_dfs(nbr, cand & nbr[v], size + 1, best);
    }
}

}  // namespace detail

// Exhaustive max-clique; instances here are desk scale.
inline int clique_number(const Graph& g) {
    if (g.order() == 0) return 0;
    if (g.order() > 64) throw std::runtime_error("clique search capped at 64 vertices");
    std::vector<uint64_t> nbr(g.order(), 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= uint64_t{1} << v;
        nbr[v] |= uint64_t{1} << u;
    }
    int best = 1;
    uint64_t all = g.order() == 64 ? ~uint64_t{0} : (uint64_t{1} << g.order()) - 1;
    detail::clique_dfs(nbr, all, 0, best);
    return best;
}

inline std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> ecc(g.order(), kUnreachable);
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        int worst = 0;
        for (int d : dist) {
            if (d == kUnreachable) { worst = kUnreachable; break; }
            worst = std::max(worst, d);
        }
        ecc[v] = worst;
    }
    return ecc;
}

inline StructuralInvariants structural_invariants(const Graph& g) {
    StructuralInvariants inv;
    inv.components = connected_components(g);
    inv.connected = g.order() > 0 && inv.components.size() == 1;
    inv.bipartition = bipartition_colors(g);
    inv.girth = girth(g);
    inv.clique_number = clique_number(g);
    inv.center = VertexSet({}, g.order());
    if (inv.connected) {
        auto ecc = eccentricities(g);
        int r = *std::min_element(ecc.begin(), ecc.end());
        int d = *std::max_element(ecc.begin(), ecc.end());
        inv.radius = r;
        inv.diameter = d;
        std::vector<int> center;
        for (int v = 0; v < g.order(); ++v)
            if (ecc[v] == r) center.push_back(v);
        inv.center = VertexSet(std::move(center), g.order());
    }
    return inv;
}

inline bool is_complete(const Graph& g) {
    return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

inline bool is_regular(const Graph& g) {
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

// Recognize the pseudo sphere S_t: t-1 paths of order 4 glued at two poles.
// The structure is checked directly, which is an exact isomorphism test for
// this family at any order.
inline std::optional<int> pseudo_sphere_order(const Graph& g) {
    const int n = g.order();
    if (n < 6 || n % 2 != 0) return std::nullopt;
    const int t = n / 2;
    if (t == 3) {
        // S_3 is the 6-cycle: the unique connected 2-regular graph of order 6.
        if (is_connected(g) && g.edge_count() == 6 && is_regular(g) && g.degree(0) == 2)
            return 3;
        return std::nullopt;
    }
    std::vector<int> poles;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == t - 1) poles.push_back(v);
        else if (g.degree(v) != 2) return std::nullopt;
    }
    if (poles.size() != 2) return std::nullopt;
    int a = poles[0], b = poles[1];
    if (g.adjacent(a, b)) return std::nullopt;
    std::vector<char> near_a(n, 0), near_b(n, 0);
    for (int p : g.neighbors(a)) near_a[p] = 1;
    for (int q : g.neighbors(b)) near_b[q] = 1;
    for (int v = 0; v < n; ++v)
        if (near_a[v] && near_b[v]) return std::nullopt;
    std::vector<char> matched(n, 0);
    for (int p : g.neighbors(a)) {
        // p must continue into exactly one unmatched neighbor of b
        int q = -1;
        for (int w : g.neighbors(p))
            if (w != a) q = w;
        if (q == -1 || !near_b[q] || matched[q]) return std::nullopt;
        matched[q] = 1;
    }
    return t;
}

// Canonical code for graphs of order <= 8: minimum adjacency bit pattern over
// all vertex permutations.
inline uint64_t canonical_code(const Graph& g) {
    const int n = g.order();
    if (n > 8) throw std::runtime_error("canonical code limited to order 8");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.adjacent(perm[i], perm[j])) code |= uint64_t{1} << bit;
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace lmd
