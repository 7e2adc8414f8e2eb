#ifndef CHROMA_INVARIANTS_HPP
#define CHROMA_INVARIANTS_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chroma/chromatic.hpp"
#include "chroma/clique.hpp"
#include "chroma/coloring.hpp"
#include "chroma/respectful.hpp"

namespace chroma {

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

/// Edges uv with chi(G - u - v) == chi(G) - 2, in ascending (u,v) order.
/// Since deleting two vertices lowers chi by at most 2, a single coloring
/// decision per edge settles the test.
inline std::vector<std::pair<int, int>> doubly_critical_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    if (g.order() < 2) return out;
    int chi = chromatic_number(g);
    for (int u = 0; u < g.order(); ++u) {
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            VertexSet drop;
            drop.add(u);
            drop.add(v);
            if (colorable_with(g.delete_vertices(drop).graph, chi - 2)) out.emplace_back(u, v);
        }
    }
    return out;
}

/// Reference chromatic number: for k = 1, 2, ... exhaustively enumerate
/// assignments of k colors (vertex 0 pinned to color 0) until one is proper.
/// Independent of the branch-and-bound solver; guarded to n <= 10.
inline int oracle_chromatic_number(const Graph& g) {
    int n = g.order();
    if (n > 10) throw std::invalid_argument("oracle chromatic number guarded to n <= 10");
    if (n == 0) return 0;
    std::vector<int> color(std::size_t(n), -1);
    auto feasible = [&](auto&& self, int v, int k) -> bool {
        if (v == n) return true;
        int choices = (v == 0) ? 1 : k;
        for (int c = 0; c < choices; ++c) {
            bool clash = false;
            g.neighbors(v).for_each([&](int w) {
                if (w < v && color[std::size_t(w)] == c) clash = true;
            });
            if (clash) continue;
            color[std::size_t(v)] = c;
            if (self(self, v + 1, k)) return true;
        }
        color[std::size_t(v)] = -1;
        return false;
    };
    for (int k = 1;; ++k)
        if (feasible(feasible, 0, k)) return k;
}

/// Per-graph invariant bundle. Fields beyond the always-computed basics are
/// optional: they are filled on request and skipped above the search guard.
struct InvariantRecord {
    int n = 0;
    int chi = 0;
    int omega = 0;
    int alpha = 0;
    int delta = 0;
    std::optional<int> iota;
    std::optional<bool> has_doubly_critical_edge;
    std::optional<std::pair<int, int>> doubly_critical_witness;
    std::optional<bool> all_optimal_classes_le2;
    std::optional<RemainderReport> respectful;  // minimal remainder at r = respectful_r
    int respectful_r = 3;
};

struct InvariantOptions {
    bool with_iota = true;
    bool with_doubly_critical = true;
    bool with_small_classes = true;
    bool with_respectful = true;
    int respectful_r = 3;
    // iota / class-size / respectful searches run only when n <= enum_guard
    // (the respectful search is additionally hard-capped at n <= 10)
    int enum_guard = 10;
};

inline InvariantRecord compute_invariants(const Graph& g, const InvariantOptions& opt = {}) {
    InvariantRecord rec;
    rec.n = g.order();
    rec.chi = chromatic_number(g);
    rec.omega = clique_number(g);
    rec.alpha = independence_number(g);
    rec.delta = max_degree(g);
    rec.respectful_r = opt.respectful_r;
    if (opt.with_doubly_critical) {
        auto edges = doubly_critical_edges(g);
        rec.has_doubly_critical_edge = !edges.empty();
        if (!edges.empty()) rec.doubly_critical_witness = edges.front();
    }
    if (rec.n <= opt.enum_guard) {
        if (opt.with_iota) rec.iota = iota(g);
        if (opt.with_small_classes) rec.all_optimal_classes_le2 = all_optimal_classes_at_most(g, 2);
        if (opt.with_respectful && rec.n <= 10)
            rec.respectful = minimal_remainder_respectful(g, opt.respectful_r);
    }
    return rec;
}

}  // namespace chroma

#endif
