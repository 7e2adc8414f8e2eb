#ifndef CHROMA_CLIQUE_HPP
#define CHROMA_CLIQUE_HPP

#include <array>
#include <cstdint>

#include "chroma/graph.hpp"

namespace chroma {

struct CliqueResult {
    int size = 0;
    VertexSet members;
};

namespace detail {

// Bitset max-clique branch and bound; candidates are pruned with a greedy
// coloring bound and processed in descending color, ties toward lower index.
class CliqueSolver {
public:
    explicit CliqueSolver(const Graph& g) : g_(g) {}

    CliqueResult run() {
        best_ = CliqueResult{};
        expand(g_.vertices(), VertexSet{}, 0);
        return best_;
    }

private:
    void expand(VertexSet cand, VertexSet cur, int size) {
        if (cand.empty()) {
            if (size > best_.size) best_ = CliqueResult{size, cur};
            return;
        }
        int order[Graph::max_order];
        int bound[Graph::max_order];
        int count = 0;
        VertexSet rest = cand;
        int color = 0;
        while (!rest.empty()) {
            ++color;
            VertexSet avail = rest;
            while (!avail.empty()) {
                int v = avail.lowest();
                order[count] = v;
                bound[count] = color;
                ++count;
                avail.remove(v);
                avail = avail - g_.neighbors(v);
                rest.remove(v);
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + bound[i] <= best_.size) return;
            int v = order[i];
            VertexSet next = cand & g_.neighbors(v);
            VertexSet grown = cur;
            grown.add(v);
            expand(next, grown, size + 1);
            cand.remove(v);
        }
    }

    const Graph& g_;
    CliqueResult best_;
};

}  // namespace detail

inline CliqueResult maximum_clique(const Graph& g) { return detail::CliqueSolver(g).run(); }

inline int clique_number(const Graph& g) { return maximum_clique(g).size; }

inline CliqueResult maximum_independent_set(const Graph& g) {
    return detail::CliqueSolver(g.complement()).run();
}

inline int independence_number(const Graph& g) { return maximum_independent_set(g).size; }

}  // namespace chroma

#endif
