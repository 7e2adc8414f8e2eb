#ifndef CHROMA_GRAPH6_HPP
#define CHROMA_GRAPH6_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chroma/graph.hpp"

namespace chroma {

// graph6 lines, as published in the nauty format documentation: a size
// header (n+63 for n <= 62, or '~' followed by three 6-bit digits), then the
// upper-triangle adjacency bits in column-major order (columns j = 1..n-1,
// rows i < j), packed into 6-bit groups, each group offset by 63 and the
// last group zero-padded. This codec handles n <= 64 and labeled graphs
// only; no isomorphism reduction.

class Graph6Error : public std::runtime_error {
public:
    explicit Graph6Error(const std::string& what) : std::runtime_error(what) {}
};

inline Graph decode_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error("empty graph6 line");
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size()) throw Graph6Error("truncated graph6 line");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw Graph6Error("graph6 byte out of range at position " + std::to_string(pos - 1));
        return c - 63;
    };

    long n;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        if (pos < line.size() && line[pos] == '~')
            throw Graph6Error("graph order beyond supported range");
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > Graph::max_order) throw Graph6Error("graph order exceeds 64");

    std::array<VertexSet, Graph::max_order> rows{};
    int nbits = int(n) * (int(n) - 1) / 2;
    int group = 0, have = 0;
    int i = 0, j = 1;
    for (int bit = 0; bit < nbits; ++bit) {
        if (have == 0) {
            group = next();
            have = 6;
        }
        --have;
        if (group >> have & 1) {
            rows[i].add(j);
            rows[j].add(i);
        }
        if (++i == j) {
            i = 0;
            ++j;
        }
    }
    if (have > 0 && (group & ((1 << have) - 1)) != 0)
        throw Graph6Error("nonzero padding bits");
    if (pos != line.size()) throw Graph6Error("trailing bytes after graph6 payload");
    return Graph::from_adjacency(int(n), std::span<const VertexSet>(rows.data(), std::size_t(n)));
}

inline std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > Graph::max_order) throw std::invalid_argument("graph order exceeds supported range");
    std::string out;
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else {
        out.push_back('~');
        out.push_back(char((n >> 12 & 63) + 63));
        out.push_back(char((n >> 6 & 63) + 63));
        out.push_back(char((n & 63) + 63));
    }
    int group = 0, have = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = group << 1 | int(g.has_edge(i, j));
            if (++have == 6) {
                out.push_back(char(group + 63));
                group = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(char((group << (6 - have)) + 63));
    return out;
}

}  // namespace chroma

#endif
