#pragma once
// Graph family generators and the textual FamilySpec they are addressed by.
// Family strings use prefix notation with ':' and ',' as delimiters, e.g.
//   path:7    completeBipartite:2,3    corona:path:2,cycle:5
// Every kind has fixed arity, so the token stream parses unambiguously.

#include <array>
#include <sstream>

#include "lmd/edge_io.hpp"
#include "lmd/graph.hpp"

namespace lmd {

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

inline Graph path_graph(int t) {
    if (t < 1) throw std::invalid_argument("path needs t >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < t; ++i) edges.push_back({i, i + 1});
    return Graph(t, std::move(edges));
}

inline Graph cycle_graph(int t) {
    if (t < 3) throw std::invalid_argument("cycle needs t >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i) edges.push_back({i, (i + 1) % t});
    return Graph(t, std::move(edges));
}

inline Graph complete_graph(int t) {
    if (t < 1) throw std::invalid_argument("complete graph needs t >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) edges.push_back({i, j});
    return Graph(t, std::move(edges));
}

inline Graph complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("complete bipartite needs r,s >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) edges.push_back({i, r + j});
    return Graph(r + s, std::move(edges));
}

// Star with t leaves (order t+1), center first.
inline Graph star_graph(int t) { return complete_bipartite(1, t); }

inline Graph empty_graph(int t) {
    if (t < 1) throw std::invalid_argument("empty graph needs t >= 1");
    return Graph(t, {});
}

// Pseudo sphere S_t (near pencil): t-1 paths of order 4 with one extreme of
// each identified at pole a and the other extreme at pole b. Order 2t.
// Indexing: a=0, b=1, path j uses 2+2j (next to a) and 3+2j (next to b).
inline Graph pseudo_sphere(int t) {
    if (t < 3) throw std::invalid_argument("pseudo sphere needs t >= 3");
    std::vector<Edge> edges;
    for (int j = 0; j < t - 1; ++j) {
        int p = 2 + 2 * j, q = 3 + 2 * j;
        edges.push_back({0, p});
        edges.push_back({p, q});
        edges.push_back({q, 1});
    }
    return Graph(2 * t, std::move(edges));
}

// Point/line incidence graph of the projective plane over the prime field of
// order q. Points first (0..N-1), then lines (N..2N-1), N = q^2+q+1.
// Homogeneous coordinates are normalized so the first nonzero entry is 1.
inline Graph projective_plane(int q) {
    if (!is_prime(q)) throw std::invalid_argument("unsupported plane order");
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) reps.push_back({1, a, b});
    for (int b = 0; b < q; ++b) reps.push_back({0, 1, b});
    reps.push_back({0, 0, 1});
    const int n = static_cast<int>(reps.size());
    std::vector<Edge> edges;
    std::vector<std::string> labels(2 * n);
    auto coord = [](const std::array<int, 3>& t) {
        return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
    };
    for (int i = 0; i < n; ++i) {
        labels[i] = "p" + coord(reps[i]);
        labels[n + i] = "l" + coord(reps[i]);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int dot = 0;
            for (int k = 0; k < 3; ++k) dot += reps[i][k] * reps[j][k];
            if (dot % q == 0) edges.push_back({i, n + j});
        }
    return Graph(2 * n, std::move(edges), std::move(labels));
}

// The 7-vertex example graph: 6-cycle A,B,E,F,D,C with a pendant G on F.
// Transcribed once; indices follow letters A..G.
inline Graph figure1_graph() {
    // A=0 B=1 C=2 D=3 E=4 F=5 G=6
    std::vector<Edge> edges = {{0, 1}, {1, 4}, {4, 5}, {3, 5}, {2, 3}, {0, 2}, {5, 6}};
    return Graph(7, std::move(edges), {"A", "B", "C", "D", "E", "F", "G"});
}

// Spider: one center with legs of the given lengths (each leg a path).
inline Graph spider_graph(const std::vector<int>& legs) {
    if (legs.empty()) throw std::invalid_argument("spider needs at least one leg");
    int order = 1;
    for (int len : legs) {
        if (len < 1) throw std::invalid_argument("spider legs must have length >= 1");
        order += len;
    }
    std::vector<Edge> edges;
    int next = 1;
    for (int len : legs) {
        edges.push_back({0, next});
        for (int i = 1; i < len; ++i) {
            edges.push_back({next, next + 1});
            ++next;
        }
        ++next;
    }
    return Graph(order, std::move(edges));
}

// Radius-3 tree whose two height-2 branches both have two branching children;
// its join basis analysis exercises the "every branch splits" tree case.
inline Graph twinbroom_graph() {
    // 0 center; branches 1 and 2; children 3,4 (under 1), 5,6 (under 2);
    // leaves 7..10 one per child.
    std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6},
                               {3, 7}, {4, 8}, {5, 9}, {6, 10}};
    return Graph(11, std::move(edges));
}

inline Graph complete_plus_isolated(int m) {
    if (m < 1) throw std::invalid_argument("clique part needs m >= 1");
    return disjoint_union(empty_graph(1), complete_graph(m));
}

inline Graph named_graph(const std::string& id) {
    if (id == "figure1") return figure1_graph();
    if (id == "heawood") return projective_plane(2);
    if (id == "twinbroom") return twinbroom_graph();
    if (id.rfind("k1_cup_k", 0) == 0) {
        int m = std::stoi(id.substr(8));
        return complete_plus_isolated(m);
    }
    if (id.rfind("spider_", 0) == 0) {
        std::vector<int> legs;
        std::string rest = id.substr(7);
        std::stringstream ss(rest);
        std::string part;
        while (std::getline(ss, part, '_')) legs.push_back(std::stoi(part));
        return spider_graph(legs);
    }
    throw std::invalid_argument("unknown named graph: " + id);
}

struct FamilySpec {
    enum class Kind {
        path, cycle, complete, complete_bipartite, star, empty,
        pseudo_sphere, projective_plane, named, file, corona, join
    };

    Kind kind{};
    int a = 0, b = 0;
    std::string id;                 // named id or file path
    std::vector<FamilySpec> parts;  // two entries for corona/join

    static FamilySpec parse(const std::string& text);
    std::string to_string() const;
};

namespace detail {

inline std::vector<std::string> family_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : text) {
        if (c == ':' || c == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

inline int family_int(const std::vector<std::string>& tokens, size_t& pos) {
    if (pos >= tokens.size()) throw std::invalid_argument("family spec: missing parameter");
    size_t used = 0;
    int value = std::stoi(tokens[pos], &used);
    if (used != tokens[pos].size()) throw std::invalid_argument("family spec: bad integer '" + tokens[pos] + "'");
    ++pos;
    return value;
}

inline FamilySpec parse_family(const std::vector<std::string>& tokens, size_t& pos) {
    if (pos >= tokens.size()) throw std::invalid_argument("family spec: empty");
    FamilySpec spec;
    const std::string kind = tokens[pos++];
    using K = FamilySpec::Kind;
    if (kind == "path") { spec.kind = K::path; spec.a = family_int(tokens, pos); }
    else if (kind == "cycle") { spec.kind = K::cycle; spec.a = family_int(tokens, pos); }
    else if (kind == "complete") { spec.kind = K::complete; spec.a = family_int(tokens, pos); }
    else if (kind == "completeBipartite") {
        spec.kind = K::complete_bipartite;
        spec.a = family_int(tokens, pos);
        spec.b = family_int(tokens, pos);
    }
    else if (kind == "star") { spec.kind = K::star; spec.a = family_int(tokens, pos); }
    else if (kind == "empty") { spec.kind = K::empty; spec.a = family_int(tokens, pos); }
    else if (kind == "pseudoSphere") { spec.kind = K::pseudo_sphere; spec.a = family_int(tokens, pos); }
    else if (kind == "projectivePlane") { spec.kind = K::projective_plane; spec.a = family_int(tokens, pos); }
    else if (kind == "named") {
        spec.kind = K::named;
        if (pos >= tokens.size()) throw std::invalid_argument("family spec: missing name");
        spec.id = tokens[pos++];
    }
    else if (kind == "file") {
        spec.kind = K::file;
        if (pos >= tokens.size()) throw std::invalid_argument("family spec: missing path");
        spec.id = tokens[pos++];
    }
    else if (kind == "corona" || kind == "join") {
        spec.kind = kind == "corona" ? K::corona : K::join;
        spec.parts.push_back(parse_family(tokens, pos));
        spec.parts.push_back(parse_family(tokens, pos));
    }
    else {
        throw std::invalid_argument("family spec: unknown kind '" + kind + "'");
    }
    return spec;
}

}  // namespace detail

inline FamilySpec FamilySpec::parse(const std::string& text) {
    auto tokens = detail::family_tokens(text);
    size_t pos = 0;
    FamilySpec spec = detail::parse_family(tokens, pos);
    if (pos != tokens.size()) throw std::invalid_argument("family spec: trailing tokens");
    return spec;
}

inline std::string FamilySpec::to_string() const {
    using K = Kind;
    switch (kind) {
        case K::path: return "path:" + std::to_string(a);
        case K::cycle: return "cycle:" + std::to_string(a);
        case K::complete: return "complete:" + std::to_string(a);
        case K::complete_bipartite:
            return "completeBipartite:" + std::to_string(a) + "," + std::to_string(b);
        case K::star: return "star:" + std::to_string(a);
        case K::empty: return "empty:" + std::to_string(a);
        case K::pseudo_sphere: return "pseudoSphere:" + std::to_string(a);
        case K::projective_plane: return "projectivePlane:" + std::to_string(a);
        case K::named: return "named:" + id;
        case K::file: return "file:" + id;
        case K::corona: return "corona:" + parts[0].to_string() + "," + parts[1].to_string();
        case K::join: return "join:" + parts[0].to_string() + "," + parts[1].to_string();
    }
    throw std::logic_error("unreachable");
}

inline Graph build_family(const FamilySpec& spec) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::path: return path_graph(spec.a);
        case K::cycle: return cycle_graph(spec.a);
        case K::complete: return complete_graph(spec.a);
        case K::complete_bipartite: return complete_bipartite(spec.a, spec.b);
        case K::star: return star_graph(spec.a);
        case K::empty: return empty_graph(spec.a);
        case K::pseudo_sphere: return pseudo_sphere(spec.a);
        case K::projective_plane: return projective_plane(spec.a);
        case K::named: return named_graph(spec.id);
        case K::file: return read_edge_list_file(spec.id);
        case K::corona: return corona(build_family(spec.parts[0]), build_family(spec.parts[1]));
        case K::join: return join(build_family(spec.parts[0]), build_family(spec.parts[1]));
    }
    throw std::logic_error("unreachable");
}

inline Graph build_family(const std::string& text) { return build_family(FamilySpec::parse(text)); }

}  // namespace lmd
