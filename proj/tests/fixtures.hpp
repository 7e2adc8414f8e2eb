#ifndef CHROMA_TESTS_FIXTURES_HPP
#define CHROMA_TESTS_FIXTURES_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/graph.hpp"

namespace fixtures {

inline chroma::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return chroma::Graph::from_edge_list(n, edges);
}

inline chroma::Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return chroma::Graph::from_edge_list(n, edges);
}

inline chroma::Graph empty(int n) { return chroma::Graph::from_edge_list(n, {}); }

inline chroma::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return chroma::Graph::from_edge_list(n, edges);
}

/// K_{1,k}: vertex 0 is the hub.
inline chroma::Graph star(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
    return chroma::Graph::from_edge_list(k + 1, edges);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline chroma::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, 5 + i);
    }
    return chroma::Graph::from_edge_list(10, edges);
}

inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

inline std::string data_file(const std::string& name) {
    return std::string(CHROMA_TEST_DATA_DIR) + "/" + name;
}

/// Catalog of all graphs on exactly n vertices, one per isomorphism class.
inline std::vector<std::string> catalog_lines(int n) {
    return read_lines(data_file("graphs" + std::to_string(n) + ".g6"));
}

}  // namespace fixtures

#endif
