#pragma once
// Closed formulas, bounds and characterizations for the local metric
// dimension of corona products. Predicates implement structural conditions
// only; they never consult the exhaustive solver, so comparing them against
// it is a meaningful check. The prediction engine reduces the corona problem
// to K1 + H via the apex-membership case split.

#include "lmd/families.hpp"
#include "lmd/local_metric.hpp"

namespace lmd {

struct RuleNotApplicable : std::runtime_error {
    explicit RuleNotApplicable(const std::string& what) : std::runtime_error(what) {}
};

struct Prediction {
    std::optional<int> value;
    std::optional<std::pair<int, int>> interval;
    std::string rule;
    std::vector<std::string> assumptions;

    static Prediction exact(int v, std::string rule, std::vector<std::string> assumptions = {}) {
        Prediction p;
        p.value = v;
        p.rule = std::move(rule);
        p.assumptions = std::move(assumptions);
        return p;
    }

    static Prediction range(int lo, int hi, std::string rule, std::vector<std::string> assumptions = {}) {
        Prediction p;
        p.interval = {lo, hi};
        p.rule = std::move(rule);
        p.assumptions = std::move(assumptions);
        return p;
    }

    std::string describe() const {
        if (value) return std::to_string(*value);
        return "[" + std::to_string(interval->first) + "," + std::to_string(interval->second) + "]";
    }
};

// dim_l(G (x) H) via the main case split:
//   - H without edges: equals dim_l(G)
//   - n = 1: the corona is K1 + H
//   - apex in no minimum basis of K1+H: n * dim_l(K1+H)
//   - apex in some minimum basis:       n * (dim_l(K1+H) - 1)
inline Prediction theorem3_corona_dimension(const Graph& g, const Graph& h, SolveOptions opt = {}) {
    if (!is_connected(g)) throw std::invalid_argument("G must be connected");
    const int n = g.order();
    if (n == 1) {
        auto d = local_metric_dimension(apex_join(h), opt);
        return Prediction::exact(d.value, "corona-is-join", {"n = 1"});
    }
    if (h.edge_count() == 0) {
        auto d = local_metric_dimension(g, opt);
        return Prediction::exact(d.value, "corona-empty-h", {"H has no edges"});
    }
    auto apex = apex_in_some_basis(h, opt);
    if (apex.apex_in_some)
        return Prediction::exact(n * (apex.dim_join - 1), "corona-apex-used",
                                 {"apex in a minimum basis of K1+H",
                                  "dim_l(K1+H) = " + std::to_string(apex.dim_join)});
    return Prediction::exact(n * apex.dim_join, "corona-apex-free",
                             {"apex in no minimum basis of K1+H",
                              "dim_l(K1+H) = " + std::to_string(apex.dim_join)});
}

// Closed forms for complete, complete bipartite, path and cycle attachments.
inline Prediction family_closed_form(int n, const FamilySpec& family) {
    if (n < 2) throw RuleNotApplicable("closed forms require n >= 2");
    using K = FamilySpec::Kind;
    switch (family.kind) {
        case K::complete:
            if (family.a >= 2)
                return Prediction::exact(n * (family.a - 1), "closed-complete");
            break;
        case K::complete_bipartite:
            if (family.a >= 1 && family.b >= 1)
                return Prediction::exact(n, "closed-complete-bipartite");
            break;
        case K::path: {
            int t = family.a;
            if (t >= 4) {
                int v = (t % 4 == 1) ? n * (t / 4) : n * ((t + 3) / 4);
                return Prediction::exact(v, "closed-path");
            }
            break;
        }
        case K::cycle: {
            int t = family.a;
            if (t >= 4) return Prediction::exact(n * ((t + 3) / 4), "closed-cycle");
            break;
        }
        default:
            break;
    }
    throw RuleNotApplicable("no closed form; use theorem3_corona_dimension");
}

// Tightest interval implied by the applicable bounds.
inline Prediction dimension_bounds(const Graph& g, const Graph& h, SolveOptions opt = {}) {
    if (h.edge_count() == 0) throw RuleNotApplicable("bounds require H with at least one edge");
    if (!is_connected(g) || g.order() < 2)
        throw RuleNotApplicable("bounds require connected G of order >= 2");
    const int n = g.order();
    int lo = n;
    const int hi = n * (h.order() - 1);
    std::vector<std::string> assumptions{"order-bounds: n <= dim <= n(n'-1)"};
    if (is_connected(h) && h.order() >= 2) {
        int dh = local_metric_dimension(h, opt).value;
        if (n * dh > lo) lo = n * dh;
        assumptions.push_back("h-dim-lower: dim >= n*dim_l(H) = " + std::to_string(n * dh));
        auto inv = structural_invariants(h);
        if (inv.radius && *inv.radius >= 3) {
            if (2 * n > lo) lo = 2 * n;
            assumptions.push_back("radius3-lower: r(H) >= 3 forces dim >= 2n");
        }
    }
    if (lo > hi) throw std::logic_error("bound intersection is empty");
    return Prediction::range(lo, hi, "bounds", std::move(assumptions));
}

// H attains the maximum n(n'-1) iff it is complete or a complete graph of
// order n'-1 plus one isolated vertex (structural test only).
inline bool extremal_upper_characterization(const Graph& h) {
    if (h.order() < 2) throw std::invalid_argument("characterization requires order >= 2");
    if (is_complete(h) && h.edge_count() > 0) return true;
    std::vector<int> isolated, rest;
    for (int v = 0; v < h.order(); ++v)
        (h.degree(v) == 0 ? isolated : rest).push_back(v);
    if (isolated.size() != 1 || rest.size() < 2) return false;
    return is_complete(induced_subgraph(h, rest));
}

// H attains the minimum n iff it is bipartite with exactly one non-trivial
// component and that component has radius <= 2.
inline bool lower_extreme_characterization(const Graph& h) {
    if (h.edge_count() == 0) throw RuleNotApplicable("characterization requires H with at least one edge");
    if (!is_bipartite(h)) return false;
    auto comps = connected_components(h);
    std::vector<int> nontrivial_index;
    for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].size() >= 2) nontrivial_index.push_back(static_cast<int>(i));
    if (nontrivial_index.size() != 1) return false;
    auto star = induced_subgraph(h, comps[nontrivial_index[0]]);
    auto inv = structural_invariants(star);
    return inv.radius && *inv.radius <= 2;
}

// For H of diameter two, dim_l(G (x) H) = n * dim_l(H); returns the per-vertex
// multiplier dim_l(H), or nothing when the diameter is not two.
inline std::optional<int> diameter_two_equality(const Graph& h, SolveOptions opt = {}) {
    if (!is_connected(h)) throw std::invalid_argument("H must be connected");
    auto inv = structural_invariants(h);
    if (!inv.diameter || *inv.diameter != 2) return std::nullopt;
    return local_metric_dimension(h, opt).value;
}

// beta(x): minimum subset of N(x) dominating the distance-2 shell of x.
// Defined on center vertices of graphs with radius >= 2.
inline int beta(const Graph& h, int x) {
    if (!is_connected(h)) throw std::invalid_argument("beta requires a connected graph");
    auto ecc = eccentricities(h);
    int radius = *std::min_element(ecc.begin(), ecc.end());
    if (radius < 2) throw std::invalid_argument("beta requires a graph of radius >= 2");
    if (x < 0 || x >= h.order() || ecc[x] != radius)
        throw std::invalid_argument("beta defined only on center vertices");
    const auto& nbrs = h.neighbors(x);
    auto shell2 = neighborhood_shell(h, x, 2);
    const int m = shell2.size();
    const int words = std::max(1, (m + 63) / 64);
    detail::CoverProblem problem;
    problem.candidates = static_cast<int>(nbrs.size());
    problem.words = words;
    problem.masks.assign(static_cast<size_t>(problem.candidates) * words, 0);
    for (int i = 0; i < problem.candidates; ++i)
        for (int e = 0; e < m; ++e)
            if (h.adjacent(nbrs[i], shell2.members[e]))
                problem.masks[static_cast<size_t>(i) * words + e / 64] |= uint64_t{1} << (e % 64);
    problem.universe.assign(words, 0);
    for (int e = 0; e < m; ++e) problem.universe[e / 64] |= uint64_t{1} << (e % 64);
    auto cover = detail::solve_min_cover(problem, false);
    if (cover.covers.empty()) throw std::logic_error("neighborhood fails to dominate its own shell");
    return cover.size;
}

// delta'(H): minimum of beta over the center.
inline int delta_prime(const Graph& h) {
    auto inv = structural_invariants(h);
    if (!inv.connected) throw std::invalid_argument("delta' requires a connected graph");
    int best = -1;
    for (int x : inv.center.members) {
        int b = beta(h, x);
        if (best == -1 || b < best) best = b;
    }
    return best;
}

// For bipartite H of radius three: 2n <= dim_l(G (x) H) <= n * delta'(H).
inline Prediction bipartite_radius3_upper(const Graph& h, int n) {
    if (n < 2) throw RuleNotApplicable("requires n >= 2");
    auto inv = structural_invariants(h);
    if (!inv.bipartition || !inv.radius || *inv.radius != 3)
        throw RuleNotApplicable("rule not applicable: needs bipartite H of radius 3");
    int dp = delta_prime(h);
    return Prediction::range(2 * n, n * dp, "radius3-delta-prime",
                             {"H bipartite", "r(H) = 3",
                              "delta'(H) = " + std::to_string(dp)});
}

// Exact values for the bipartite diameter-3 girth-6 family: 2n for pseudo
// spheres, n * degree for the regular (projective plane incidence) case.
inline std::optional<Prediction> projective_like_exact(const Graph& h, int n) {
    if (n < 2) throw RuleNotApplicable("requires n >= 2");
    auto inv = structural_invariants(h);
    if (!inv.connected || !inv.bipartition) return std::nullopt;
    if (!inv.diameter || *inv.diameter != 3) return std::nullopt;
    if (!inv.girth || *inv.girth != 6) return std::nullopt;
    if (auto t = pseudo_sphere_order(h))
        return Prediction::exact(2 * n, "pseudo-sphere",
                                 {"H = S_" + std::to_string(*t)});
    if (is_regular(h))
        return Prediction::exact(n * h.degree(0), "plane-incidence",
                                 {"H regular of degree " + std::to_string(h.degree(0)),
                                  "bipartite, diameter 3, girth 6"});
    throw RuleNotApplicable("outside the pseudo-sphere / plane classification");
}

// Minimum point/line cover of a projective plane: |P' u L'| such that every
// incident pair (p0, l0) has a chosen point on l0 or a chosen line through p0.
struct UpsilonResult {
    int q = 0;
    int value = 0;
    int delta_prime_incidence = 0;
    bool pencil_structure = false;  // every optimum is a full line or a full pencil
    std::vector<std::pair<std::vector<int>, std::vector<int>>> optima;  // (points, lines)
};

inline UpsilonResult upsilon_plane(int q) {
    if (!is_prime(q)) throw std::invalid_argument("unsupported plane order");
    if (q > 5) throw std::runtime_error("q too large for exhaustive search");
    Graph plane = projective_plane(q);
    const int n = plane.order() / 2;  // points 0..n-1, lines n..2n-1

    std::vector<std::pair<int, int>> pairs;  // (point, line index 0..n-1), incident
    for (int p = 0; p < n; ++p)
        for (int l : plane.neighbors(p)) pairs.push_back({p, l - n});
    const int m = static_cast<int>(pairs.size());
    const int words = std::max(1, (m + 63) / 64);

    detail::CoverProblem problem;
    problem.candidates = 2 * n;
    problem.words = words;
    problem.masks.assign(static_cast<size_t>(2 * n) * words, 0);
    for (int e = 0; e < m; ++e) {
        auto [p0, l0] = pairs[e];
        // a chosen point covers every pair whose line contains it
        for (int p : plane.neighbors(n + l0))
            problem.masks[static_cast<size_t>(p) * words + e / 64] |= uint64_t{1} << (e % 64);
        // a chosen line covers every pair whose point lies on it; line vertices
        // n..2n-1 double as candidate indices n..2n-1
        for (int l : plane.neighbors(p0))
            problem.masks[static_cast<size_t>(l) * words + e / 64] |= uint64_t{1} << (e % 64);
    }
    problem.universe.assign(words, 0);
    for (int e = 0; e < m; ++e) problem.universe[e / 64] |= uint64_t{1} << (e % 64);

    auto cover = detail::solve_min_cover(problem, true);
    if (cover.covers.empty()) throw std::logic_error("plane cover search failed");

    UpsilonResult result;
    result.q = q;
    result.value = cover.size;
    result.delta_prime_incidence = delta_prime(plane);
    result.pencil_structure = true;
    for (const auto& c : cover.covers) {
        std::vector<int> pts, lns;
        for (int idx : c) (idx < n ? pts : lns).push_back(idx < n ? idx : idx - n);
        bool pencil = false;
        if (lns.empty()) {
            // all chosen points on one common line, and all of that line
            for (int l = 0; l < n && !pencil; ++l) {
                const auto& on_line = plane.neighbors(n + l);
                pencil = std::includes(on_line.begin(), on_line.end(), pts.begin(), pts.end()) &&
                         pts.size() == on_line.size();
            }
        } else if (pts.empty()) {
            for (int p = 0; p < n && !pencil; ++p) {
                std::vector<int> through;
                for (int l : plane.neighbors(p)) through.push_back(l - n);
                pencil = through == lns;
            }
        }
        if (!pencil) result.pencil_structure = false;
        result.optima.push_back({std::move(pts), std::move(lns)});
    }
    return result;
}

namespace detail {

struct Bipartition3 {
    std::vector<int> u1, u2;  // color classes; class of vertex 0 is u1
    std::vector<int> color;
};

inline Bipartition3 bipartite_radius3_classes(const Graph& h) {
    auto inv = structural_invariants(h);
    if (!inv.bipartition || !inv.radius || *inv.radius != 3)
        throw RuleNotApplicable("rule not applicable: needs bipartite H of radius 3");
    Bipartition3 b;
    b.color = *inv.bipartition;
    for (int v = 0; v < h.order(); ++v) (b.color[v] == 0 ? b.u1 : b.u2).push_back(v);
    return b;
}

}  // namespace detail

// dim_l(K1+H) = 2 for bipartite H of radius three, decided structurally:
// (i) two same-class vertices whose neighborhoods partition the other class,
// or (ii) a cross pair (a,b) such that every edge xy has y ~ a or x ~ b.
inline bool dim2_join_characterization(const Graph& h) {
    auto b = detail::bipartite_radius3_classes(h);
    auto neighbors_of = [&](int v) { return h.neighbors(v); };
    // (i)
    for (const auto* cls : {&b.u1, &b.u2}) {
        const auto& same = *cls;
        const auto& other = (cls == &b.u1) ? b.u2 : b.u1;
        for (size_t i = 0; i < same.size(); ++i)
            for (size_t j = i + 1; j < same.size(); ++j) {
                const auto& na = neighbors_of(same[i]);
                const auto& nb = neighbors_of(same[j]);
                if (na.size() + nb.size() != other.size()) continue;
                std::vector<int> merged;
                std::merge(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(merged));
                if (std::adjacent_find(merged.begin(), merged.end()) != merged.end()) continue;
                if (merged == other) return true;
            }
    }
    // (ii)
    for (int a : b.u1)
        for (int bb : b.u2) {
            bool ok = true;
            for (const auto& [x, y] : h.edges()) {
                int u = b.color[x] == 0 ? x : y;  // u in U1, w in U2
                int w = b.color[x] == 0 ? y : x;
                if (!h.adjacent(a, w) && !h.adjacent(bb, u)) { ok = false; break; }
            }
            if (ok) return true;
        }
    return false;
}

// dim_l(G (x) H) = 2n for bipartite H of radius three iff dim_l(K1+H) = 2 or
// two same-class vertices cover the other class with their neighborhoods.
inline bool two_n_characterization(const Graph& h) {
    auto b = detail::bipartite_radius3_classes(h);
    if (dim2_join_characterization(h)) return true;
    for (const auto* cls : {&b.u1, &b.u2}) {
        const auto& same = *cls;
        const auto& other = (cls == &b.u1) ? b.u2 : b.u1;
        for (size_t i = 0; i < same.size(); ++i)
            for (size_t j = i + 1; j < same.size(); ++j) {
                std::vector<int> merged;
                const auto& na = h.neighbors(same[i]);
                const auto& nb = h.neighbors(same[j]);
                std::set_union(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(merged));
                if (merged == other) return true;
            }
    }
    return false;
}

struct TreeProfile {
    VertexSet center;
    int radius = 0;
    std::vector<std::pair<int, int>> heights;  // (w, h_w) for w in N(center), sorted
    VertexSet sigma_set;                       // branches of height exactly 2
    int varsigma = 0;
    std::vector<std::pair<int, int>> phi;      // (w, number of children of w with degree >= 2)
};

// Rooted-forest profile of a unicentral radius-3 tree. Bicentral trees have
// no profile; the corona formula handles them directly.
inline std::optional<TreeProfile> tree_profile(const Graph& t) {
    if (!is_tree(t)) throw RuleNotApplicable("rule not applicable: needs a tree");
    auto inv = structural_invariants(t);
    if (!inv.radius || *inv.radius != 3)
        throw RuleNotApplicable("rule not applicable: needs a tree of radius 3");
    if (inv.center.size() == 2) return std::nullopt;

    TreeProfile profile;
    profile.center = inv.center;
    profile.radius = *inv.radius;
    const int u = inv.center.members[0];
    std::vector<int> sigma;
    for (int w : t.neighbors(u)) {
        // subtree under w once u is removed: BFS from w avoiding u
        std::vector<int> dist(t.order(), kUnreachable);
        std::vector<int> queue{w};
        dist[w] = 0;
        int height = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int x = queue[head];
            for (int y : t.neighbors(x)) {
                if (y == u || dist[y] != kUnreachable) continue;
                dist[y] = dist[x] + 1;
                height = std::max(height, dist[y]);
                queue.push_back(y);
            }
        }
        profile.heights.push_back({w, height});
        if (height == 2) sigma.push_back(w);
        int branching = 0;
        for (int z : t.neighbors(w))
            if (z != u && t.degree(z) >= 2) ++branching;
        profile.phi.push_back({w, branching});
    }
    std::sort(profile.heights.begin(), profile.heights.end());
    std::sort(profile.phi.begin(), profile.phi.end());
    profile.sigma_set = VertexSet(std::move(sigma), t.order());
    profile.varsigma = profile.sigma_set.size();
    return profile;
}

// Closed form for radius-3 trees: 2n when bicentral; otherwise n*(sigma+1)
// when some branch has height exactly 1, else n*sigma.
inline Prediction tree_corona_dimension(const Graph& t, int n) {
    if (n < 2) throw RuleNotApplicable("requires n >= 2");
    auto profile = tree_profile(t);  // validates tree + radius
    if (!profile) return Prediction::exact(2 * n, "tree-bicentral", {"|C(T)| = 2"});
    bool has_height1 = false;
    for (const auto& [w, hw] : profile->heights)
        if (hw == 1) { has_height1 = true; break; }
    if (has_height1)
        return Prediction::exact(n * (profile->varsigma + 1), "tree-height1-branch",
                                 {"some branch has height 1",
                                  "varsigma = " + std::to_string(profile->varsigma)});
    return Prediction::exact(n * profile->varsigma, "tree-deep-branches",
                             {"no branch of height 1",
                              "varsigma = " + std::to_string(profile->varsigma)});
}

}  // namespace lmd
