#ifndef CHROMA_CHROMATIC_HPP
#define CHROMA_CHROMATIC_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Proper coloring as a partition of V into independent classes. Canonical
/// form keeps classes sorted by their minimum member.
struct Coloring {
    std::vector<VertexSet> classes;

    int singleton_count() const {
        int k = 0;
        for (const VertexSet& c : classes) k += int(c.size() == 1);
        return k;
    }
    int max_class_size() const {
        int m = 0;
        for (const VertexSet& c : classes) m = std::max(m, c.size());
        return m;
    }
    void canonicalize() {
        std::sort(classes.begin(), classes.end(),
                  [](VertexSet a, VertexSet b) { return set_lex_less(a, b); });
    }
};

inline bool is_valid_coloring(const Graph& g, const Coloring& c) {
    VertexSet covered;
    for (const VertexSet& cls : c.classes) {
        if (cls.empty() || !cls.subset_of(g.vertices()) || covered.intersects(cls)) return false;
        bool independent = true;
        cls.for_each([&](int v) {
            if (g.neighbors(v).intersects(cls)) independent = false;
        });
        if (!independent) return false;
        covered |= cls;
    }
    return covered == g.vertices();
}

namespace detail {

// Exact coloring search: DSATUR vertex selection (max saturation, ties by
// max degree, then lowest index), greedy clique for the initial lower bound,
// greedy coloring for the initial upper bound, color-symmetry broken by
// allowing one fresh color per node. Deterministic throughout.
class ChiSolver {
public:
    explicit ChiSolver(const Graph& g) : g_(g), n_(g.order()) {}

    // Exact chromatic number with a witness assignment.
    int solve(std::array<int, 64>& out_colors) {
        int lb = greedy_clique_size();
        reset();
        int ub = greedy_upper_bound();
        best_count_ = ub;
        best_colors_ = colors_;
        if (ub > lb) {
            reset();
            lower_goal_ = lb;
            stop_ = false;
            dfs(0, 0);
        }
        out_colors = best_colors_;
        return best_count_;
    }

    // True iff a proper coloring with at most k colors exists; fills the
    // witness on success (using exactly the number of colors needed).
    bool decide(int k, std::array<int, 64>& out_colors) {
        if (k < 0) return false;
        reset();
        int ub = greedy_upper_bound();
        if (ub <= k) {
            out_colors = colors_;
            return true;
        }
        if (greedy_clique_size() > k) return false;
        reset();
        best_count_ = k + 1;
        lower_goal_ = k;  // any coloring within budget settles the decision
        stop_ = false;
        dfs(0, 0);
        if (best_count_ <= k) {
            out_colors = best_colors_;
            return true;
        }
        return false;
    }

private:
    void reset() {
        colors_.fill(-1);
        forbidden_.fill(0);
        for (auto& row : conflict_count_) row.fill(0);
    }

    int greedy_clique_size() const {
        VertexSet clique;
        VertexSet cand = g_.vertices();
        while (!cand.empty()) {
            int pick = -1, pick_deg = -1;
            cand.for_each([&](int v) {
                int d = (g_.neighbors(v) & cand).size();
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            });
            clique.add(pick);
            cand &= g_.neighbors(pick);
        }
        return clique.size();
    }

    int greedy_upper_bound() {
        int used = 0;
        for (int step = 0; step < n_; ++step) {
            int v = select_vertex();
            int c = std::countr_one(forbidden_[v]);
            assign(v, c);
            used = std::max(used, c + 1);
        }
        return used;
    }

    int select_vertex() const {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colors_[v] >= 0) continue;
            int sat = std::popcount(forbidden_[v]);
            int deg = g_.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    void assign(int v, int c) {
        colors_[v] = c;
        g_.neighbors(v).for_each([&](int w) {
            if (++conflict_count_[w][c] == 1) forbidden_[w] |= std::uint64_t{1} << c;
        });
    }

    void unassign(int v, int c) {
        colors_[v] = -1;
        g_.neighbors(v).for_each([&](int w) {
            if (--conflict_count_[w][c] == 0) forbidden_[w] &= ~(std::uint64_t{1} << c);
        });
    }

    void dfs(int colored, int used) {
        if (stop_ || used >= best_count_) return;
        if (colored == n_) {
            best_count_ = used;
            best_colors_ = colors_;
            if (best_count_ <= lower_goal_) stop_ = true;
            return;
        }
        int v = select_vertex();
        int limit = std::min(used, best_count_ - 2);
        for (int c = 0; c <= limit && !stop_; ++c) {
            if (forbidden_[v] >> c & 1) continue;
            assign(v, c);
            dfs(colored + 1, std::max(used, c + 1));
            unassign(v, c);
        }
    }

    const Graph& g_;
    int n_;
    std::array<int, 64> colors_{};
    std::array<std::uint64_t, 64> forbidden_{};
    std::array<std::array<std::uint8_t, 64>, 64> conflict_count_{};
    std::array<int, 64> best_colors_{};
    int best_count_ = 0;
    int lower_goal_ = 0;
    bool stop_ = false;
};

inline Coloring coloring_from_assignment(int n, int k, const std::array<int, 64>& colors) {
    Coloring c;
    c.classes.assign(std::size_t(k), VertexSet{});
    for (int v = 0; v < n; ++v) c.classes[std::size_t(colors[v])].add(v);
    c.canonicalize();
    return c;
}

}  // namespace detail

inline int chromatic_number(const Graph& g) {
    std::array<int, 64> colors{};
    return detail::ChiSolver(g).solve(colors);
}

/// Witness optimal coloring (exactly chromatic_number(g) classes).
inline Coloring optimal_coloring(const Graph& g) {
    std::array<int, 64> colors{};
    int chi = detail::ChiSolver(g).solve(colors);
    return detail::coloring_from_assignment(g.order(), chi, colors);
}

inline bool colorable_with(const Graph& g, int k) {
    std::array<int, 64> colors{};
    return detail::ChiSolver(g).decide(k, colors);
}

/// Proper coloring with at most k colors, if one exists.
inline std::optional<Coloring> try_coloring(const Graph& g, int k) {
    std::array<int, 64> colors{};
    detail::ChiSolver solver(g);
    if (!solver.decide(k, colors)) return std::nullopt;
    int used = 0;
    for (int v = 0; v < g.order(); ++v) used = std::max(used, colors[v] + 1);
    return detail::coloring_from_assignment(g.order(), used, colors);
}

}  // namespace chroma

#endif
