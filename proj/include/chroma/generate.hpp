#ifndef CHROMA_GENERATE_HPP
#define CHROMA_GENERATE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

#include "chroma/graph.hpp"

namespace chroma {

/// Labeled graph from the upper-triangle bit mask (graph6 bit order:
/// columns j = 1..n-1, rows i < j; bit 0 is the pair (0,1)).
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::array<VertexSet, Graph::max_order> rows{};
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (mask >> bit & 1u) {
                rows[std::size_t(i)].add(j);
                rows[std::size_t(j)].add(i);
            }
        }
    }
    return Graph::from_adjacency(n, std::span<const VertexSet>(rows.data(), std::size_t(n)));
}

inline int labeled_graph_mask_bits(int n) { return n * (n - 1) / 2; }

/// Every labeled graph on exactly n vertices, in ascending mask order.
/// fn returns false to stop early; the function reports whether it ran out.
template <class Fn>
bool for_each_labeled_graph(int n, Fn&& fn) {
    if (n < 0 || labeled_graph_mask_bits(n) > 63)
        throw std::invalid_argument("labeled enumeration supports n <= 11");
    std::uint64_t total = std::uint64_t{1} << labeled_graph_mask_bits(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (!fn(graph_from_mask(n, mask))) return false;
    return true;
}

/// G(n, p) with edges drawn independently from a seeded mt19937_64, so runs
/// are reproducible across platforms (53-bit draws, no distribution objects).
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    if (n < 0 || n > Graph::max_order) throw std::invalid_argument("graph order must be in [0,64]");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
    std::uint64_t mask = 0;
    int bits = labeled_graph_mask_bits(n);
    for (int b = 0; b < bits; ++b) {
        double u = double(rng() >> 11) * 0x1p-53;
        if (u < p) mask |= std::uint64_t{1} << b;
    }
    return graph_from_mask(n, mask);
}

}  // namespace chroma

#endif
