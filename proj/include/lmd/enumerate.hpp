#pragma once
// Exhaustive enumeration of small graphs up to isomorphism, used by the
// characterization sweeps and the catalogs.

#include "lmd/invariants.hpp"

namespace lmd {

// All graphs of the given order up to isomorphism, ordered by canonical code.
inline std::vector<Graph> all_graphs_up_to_iso(int order) {
    if (order < 1 || order > 5) throw std::invalid_argument("enumeration supported for order 1..5");
    const int pairs = order * (order - 1) / 2;
    std::map<uint64_t, Graph> reps;
    for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int i = 0; i < order; ++i)
            for (int j = i + 1; j < order; ++j, ++bit)
                if (mask & (uint64_t{1} << bit)) edges.push_back({i, j});
        Graph g(order, std::move(edges));
        reps.emplace(canonical_code(g), std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

inline std::vector<Graph> connected_graphs_up_to_iso(int order) {
    std::vector<Graph> out;
    for (auto& g : all_graphs_up_to_iso(order))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace lmd
