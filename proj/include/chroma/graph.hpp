#ifndef CHROMA_GRAPH_HPP
#define CHROMA_GRAPH_HPP

#include <array>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chroma/vertex_set.hpp"

namespace chroma {

/// Simple undirected graph on labeled vertices 0..n-1, n <= 64, stored as one
/// neighbor bitset per vertex. Immutable after construction; cheap to copy.
class Graph {
public:
    static constexpr int max_order = 64;

    Graph() = default;

    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
        if (n < 0 || n > max_order)
            throw std::invalid_argument("graph order must be in [0,64]");
        Graph g;
        g.n_ = n;
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (u == v) throw std::invalid_argument("self-loop supplied");
            g.adj_[u].add(v);
            g.adj_[v].add(u);
        }
        g.recount_edges();
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    /// Construction from prevalidated adjacency rows (codec and generators).
    static Graph from_adjacency(int n, std::span<const VertexSet> rows) {
        Graph g;
        g.n_ = n;
        for (int v = 0; v < n; ++v) g.adj_[v] = rows[v];
        g.recount_edges();
        return g;
    }

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }
    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].size(); }
    bool has_edge(int u, int v) const { return adj_[u].contains(v); }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[v] != o.adj_[v]) return false;
        return true;
    }

    Graph complement() const {
        Graph g;
        g.n_ = n_;
        VertexSet all = vertices();
        for (int v = 0; v < n_; ++v) {
            g.adj_[v] = all - adj_[v];
            g.adj_[v].remove(v);
        }
        g.recount_edges();
        return g;
    }

    struct Induced;  // induced subgraph plus the relabeling, defined below

    inline Induced induced(VertexSet keep) const;
    inline Induced delete_vertices(VertexSet drop) const;

private:
    void recount_edges() {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += adj_[v].size();
        edge_count_ = total / 2;
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::array<VertexSet, max_order> adj_{};
};

/// Induced subgraph together with the relabeling in both directions
/// (old_to_new[v] == -1 for dropped vertices).
struct Graph::Induced {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

inline Graph::Induced Graph::induced(VertexSet keep) const {
    if (!keep.subset_of(vertices()))
        throw std::invalid_argument("vertex set references out-of-range vertices");
    Induced r;
    r.old_to_new.assign(std::size_t(n_), -1);
    keep.for_each([&](int v) {
        r.old_to_new[std::size_t(v)] = int(r.new_to_old.size());
        r.new_to_old.push_back(v);
    });
    r.graph.n_ = int(r.new_to_old.size());
    for (int nv = 0; nv < r.graph.n_; ++nv) {
        VertexSet row;
        (adj_[std::size_t(r.new_to_old[std::size_t(nv)])] & keep).for_each([&](int w) {
            row.add(r.old_to_new[std::size_t(w)]);
        });
        r.graph.adj_[std::size_t(nv)] = row;
    }
    r.graph.recount_edges();
    return r;
}

inline Graph::Induced Graph::delete_vertices(VertexSet drop) const {
    if (!drop.subset_of(vertices()))
        throw std::invalid_argument("vertex set references out-of-range vertices");
    return induced(vertices() - drop);
}

}  // namespace chroma

#endif
