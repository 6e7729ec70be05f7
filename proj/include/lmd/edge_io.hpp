#pragma once
// Edge-list file format:
//   - optional comment lines starting with '#'
//   - first non-comment line: "n m"
//   - then m lines "u v" with 0-based indices
// The writer emits edges sorted; the reader rejects duplicates and loops.

#include <fstream>
#include <sstream>

#include "lmd/graph.hpp"

namespace lmd {

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line[0] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw std::runtime_error("malformed edge list: missing header");
    std::istringstream hs(header);
    long long n = 0, m = 0;
    if (!(hs >> n >> m)) throw std::runtime_error("malformed edge list: header must be 'n m'");
    std::string extra;
    if (hs >> extra) throw std::runtime_error("malformed edge list: trailing tokens in header");
    if (n < 0 || m < 0) throw std::runtime_error("malformed edge list: negative counts");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row)) throw std::runtime_error("malformed edge list: truncated");
        std::istringstream rs(row);
        long long u = 0, v = 0;
        if (!(rs >> u >> v)) throw std::runtime_error("malformed edge list: expected 'u v'");
        if (rs >> extra) throw std::runtime_error("malformed edge list: trailing tokens in edge line");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::runtime_error("malformed edge list: endpoint out of range");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    std::string leftover;
    if (next_data_line(leftover)) throw std::runtime_error("malformed edge list: extra lines");
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed edge list: ") + e.what());
    }
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    write_edge_list(out, g);
    if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace lmd
