#pragma once
// Exact local metric dimension by exhaustive search over vertex subsets in
// increasing cardinality, lexicographic within each cardinality. The search
// is a minimum-cover problem: each vertex covers (distinguishes) a set of
// edges, and a local metric generator is a set of vertices covering all
// edges. The same engine also drives the domination searches elsewhere.

#include <cstdint>
#include <map>

#include "lmd/invariants.hpp"

namespace lmd {

namespace detail {

struct CoverProblem {
    int candidates = 0;
    int words = 0;
    std::vector<uint64_t> masks;     // candidates * words
    std::vector<uint64_t> universe;  // words
};

struct CoverResult {
    int size = 0;
    std::vector<std::vector<int>> covers;  // candidate index lists, lexicographic
};

inline bool mask_covers(const uint64_t* acc, const uint64_t* uni, int words) {
    for (int w = 0; w < words; ++w)
        if ((acc[w] & uni[w]) != uni[w]) return false;
    return true;
}

class CoverSearch {
public:
    CoverSearch(const CoverProblem& p, bool enumerate_all)
        : p_(p), all_(enumerate_all), suffix_((p.candidates + 1) * p.words, 0) {
        // suffix_[i] = OR of masks i..end, used to cut dead branches
        for (int i = p_.candidates - 1; i >= 0; --i)
            for (int w = 0; w < p_.words; ++w)
                suffix_[i * p_.words + w] =
                    suffix_[(i + 1) * p_.words + w] | p_.masks[static_cast<size_t>(i) * p_.words + w];
    }

    CoverResult run() {
        CoverResult result;
        if (mask_covers_zero()) {  // empty universe: the empty set covers
            result.size = 0;
            result.covers.push_back({});
            return result;
        }
        for (int k = 1; k <= p_.candidates; ++k) {
            k_ = k;
            chosen_.clear();
            found_.clear();
            acc_.assign(static_cast<size_t>(k + 1) * p_.words, 0);
            dfs(0, 0);
            if (!found_.empty()) {
                result.size = k;
                result.covers = std::move(found_);
                return result;
            }
        }
        return result;  // no cover exists
    }

private:
    bool mask_covers_zero() const {
        for (int w = 0; w < p_.words; ++w)
            if (p_.universe[w] != 0) return false;
        return true;
    }

    bool dfs(int depth, int start) {
        const uint64_t* acc = &acc_[static_cast<size_t>(depth) * p_.words];
        if (depth == k_) {
            if (mask_covers(acc, p_.universe.data(), p_.words)) {
                found_.push_back(chosen_);
                return !all_;
            }
            return false;
        }
        for (int i = start; i <= p_.candidates - (k_ - depth); ++i) {
            bool feasible = true;
            for (int w = 0; w < p_.words; ++w) {
                uint64_t reach = acc[w] | suffix_[static_cast<size_t>(i) * p_.words + w];
                if ((reach & p_.universe[w]) != p_.universe[w]) { feasible = false; break; }
            }
            if (!feasible) break;  // suffix unions only shrink as i grows
            uint64_t* next = &acc_[static_cast<size_t>(depth + 1) * p_.words];
            for (int w = 0; w < p_.words; ++w)
                next[w] = acc[w] | p_.masks[static_cast<size_t>(i) * p_.words + w];
            chosen_.push_back(i);
            if (dfs(depth + 1, i + 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    const CoverProblem& p_;
    bool all_;
    int k_ = 0;
    std::vector<uint64_t> suffix_;
    std::vector<uint64_t> acc_;
    std::vector<int> chosen_;
    std::vector<std::vector<int>> found_;
};

inline CoverResult solve_min_cover(const CoverProblem& p, bool enumerate_all) {
    return CoverSearch(p, enumerate_all).run();
}

}  // namespace detail

struct SolveOptions {
    bool enumerate_all = false;  // collect every basis at the minimum cardinality
    int cap = 32;                // refuse instances above this order (search is exponential)
    bool prune = true;           // collapse vertices with identical distinguishing behavior
};

struct DimensionResult {
    int value = 0;
    VertexSet witness;                               // lexicographically least basis
    std::optional<std::vector<VertexSet>> all_bases; // present when enumerating
    std::string method;                              // "oracle" or a formula rule id
};

inline bool is_local_metric_generator(const Graph& g, const VertexSet& s) {
    if (!is_connected(g)) throw std::invalid_argument("undefined: graph must be connected");
    auto d = all_pairs_distances(g);
    for (const auto& [x, y] : g.edges()) {
        bool distinguished = false;
        for (int v : s.members)
            if (d.at(v, x) != d.at(v, y)) { distinguished = true; break; }
        if (!distinguished) return false;
    }
    return true;
}

// Exact minimum local metric generator. Witness selection is deterministic:
// smallest cardinality first, lexicographically least set within it.
inline DimensionResult local_metric_dimension(const Graph& g, SolveOptions opt = {}) {
    if (g.order() <= 1) throw std::invalid_argument("local metric dimension undefined for the trivial graph");
    if (!is_connected(g)) throw std::invalid_argument("undefined: graph must be connected");
    if (g.order() > opt.cap) throw std::runtime_error("instance too large for exact search");

    const auto dist = all_pairs_distances(g);
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int words = std::max(1, (m + 63) / 64);

    std::vector<std::vector<uint64_t>> vertex_mask(g.order(), std::vector<uint64_t>(words, 0));
    for (int v = 0; v < g.order(); ++v)
        for (int e = 0; e < m; ++e)
            if (dist.at(v, edges[e].first) != dist.at(v, edges[e].second))
                vertex_mask[v][e / 64] |= uint64_t{1} << (e % 64);

    // Basis enumeration needs every vertex as its own candidate; the pruned
    // search keeps one representative per distinguishing pattern, which
    // preserves the lexicographically least witness.
    std::vector<int> candidates;
    if (opt.prune && !opt.enumerate_all) {
        std::map<std::vector<uint64_t>, int> seen;
        for (int v = 0; v < g.order(); ++v) {
            bool zero = std::all_of(vertex_mask[v].begin(), vertex_mask[v].end(),
                                    [](uint64_t w) { return w == 0; });
            if (zero) continue;
            if (seen.emplace(vertex_mask[v], v).second) candidates.push_back(v);
        }
    } else {
        candidates.resize(g.order());
        std::iota(candidates.begin(), candidates.end(), 0);
    }

    detail::CoverProblem problem;
    problem.candidates = static_cast<int>(candidates.size());
    problem.words = words;
    problem.masks.resize(static_cast<size_t>(problem.candidates) * words);
    for (int i = 0; i < problem.candidates; ++i)
        std::copy(vertex_mask[candidates[i]].begin(), vertex_mask[candidates[i]].end(),
                  problem.masks.begin() + static_cast<size_t>(i) * words);
    problem.universe.assign(words, 0);
    for (int e = 0; e < m; ++e) problem.universe[e / 64] |= uint64_t{1} << (e % 64);

    auto cover = detail::solve_min_cover(problem, opt.enumerate_all);
    if (cover.covers.empty()) throw std::logic_error("no local metric generator found");

    auto to_vertex_set = [&](const std::vector<int>& idxs) {
        std::vector<int> vs;
        vs.reserve(idxs.size());
        for (int i : idxs) vs.push_back(candidates[i]);
        return VertexSet(std::move(vs), g.order());
    };

    DimensionResult result;
    result.value = cover.size;
    result.witness = to_vertex_set(cover.covers.front());
    result.method = "oracle";
    if (opt.enumerate_all) {
        std::vector<VertexSet> bases;
        bases.reserve(cover.covers.size());
        for (const auto& c : cover.covers) bases.push_back(to_vertex_set(c));
        result.all_bases = std::move(bases);
    }
    return result;
}

struct ApexReport {
    int dim_join = 0;            // dim_l(K1 + H)
    bool apex_in_some = false;   // some minimum basis contains the apex
    int apex_index = 0;
    std::vector<VertexSet> bases;  // every minimum basis of K1 + H
};

// Build K1 + H with the apex as the last vertex and enumerate all minimum
// bases to decide whether the apex can appear in one.
inline ApexReport apex_in_some_basis(const Graph& h, SolveOptions opt = {}) {
    if (h.edge_count() == 0)
        throw std::invalid_argument("apex analysis requires H with at least one edge");
    if (h.order() + 1 > opt.cap) throw std::runtime_error("instance too large for exact search");
    opt.enumerate_all = true;
    auto result = local_metric_dimension(apex_join(h), opt);
    ApexReport report;
    report.dim_join = result.value;
    report.apex_index = h.order();
    report.bases = std::move(*result.all_bases);
    for (const auto& basis : report.bases)
        if (basis.contains(report.apex_index)) { report.apex_in_some = true; break; }
    return report;
}

}  // namespace lmd
