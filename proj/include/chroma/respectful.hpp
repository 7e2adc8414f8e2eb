#ifndef CHROMA_RESPECTFUL_HPP
#define CHROMA_RESPECTFUL_HPP

#include <stdexcept>
#include <vector>

#include "chroma/chromatic.hpp"

namespace chroma {

/// Disjoint family of independent classes, not necessarily covering V.
struct PartialColoring {
    std::vector<VertexSet> classes;

    VertexSet covered() const {
        VertexSet u;
        for (const VertexSet& c : classes) u |= c;
        return u;
    }
    int min_class_size() const {
        int m = classes.empty() ? 0 : classes.front().size();
        for (const VertexSet& c : classes) m = std::min(m, c.size());
        return m;
    }
};

inline bool is_valid_partial_coloring(const Graph& g, const PartialColoring& p) {
    VertexSet covered;
    for (const VertexSet& cls : p.classes) {
        if (cls.empty() || !cls.subset_of(g.vertices()) || covered.intersects(cls)) return false;
        bool independent = true;
        cls.for_each([&](int v) {
            if (g.neighbors(v).intersects(cls)) independent = false;
        });
        if (!independent) return false;
        covered |= cls;
    }
    return true;
}

namespace detail {
inline void require_valid_partial(const Graph& g, const PartialColoring& p) {
    if (!is_valid_partial_coloring(g, p))
        throw std::invalid_argument("partial coloring is not valid for the graph");
}
}  // namespace detail

/// Every class has order at least r (vacuously true for the empty family).
inline bool is_r_greedy(const Graph& g, const PartialColoring& p, int r) {
    detail::require_valid_partial(g, p);
    for (const VertexSet& cls : p.classes)
        if (cls.size() < r) return false;
    return true;
}

/// chi(G - union of classes) == chi(G) - |classes|, i.e. the family extends
/// class-for-class to an optimal coloring.
inline bool is_respectful(const Graph& g, const PartialColoring& p) {
    detail::require_valid_partial(g, p);
    int chi = chromatic_number(g);
    Graph rest = g.delete_vertices(p.covered()).graph;
    return colorable_with(rest, chi - int(p.classes.size()));
}

struct RemainderReport {
    PartialColoring partial;
    VertexSet remainder;
    int remainder_order = 0;
    int class_count = 0;
    int remainder_chi = 0;
};

/// Minimal-remainder respectful r-greedy partial coloring. Among families
/// achieving the minimum remainder the canonically least one (classes in
/// member-lex order, families compared as sorted lists) is returned; the
/// empty family is always feasible, so a report always exists.
inline RemainderReport minimal_remainder_respectful(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("class-size floor r must be >= 1");
    int n = g.order();
    if (n > 10) throw std::invalid_argument("respectful search guarded to n <= 10");
    int chi = chromatic_number(g);

    // all independent sets of size >= r, in member-lex order
    std::vector<VertexSet> sets;
    auto collect = [&](auto&& self, VertexSet cur, int count, int last) -> void {
        if (count >= r) sets.push_back(cur);
        for (int v = last + 1; v < n; ++v) {
            if (g.neighbors(v).intersects(cur)) continue;
            VertexSet nxt = cur;
            nxt.add(v);
            self(self, nxt, count + 1, v);
        }
    };
    collect(collect, VertexSet{}, 0, -1);

    PartialColoring best;       // empty family: respectful, remainder n
    int best_remainder = n;
    std::vector<VertexSet> family;

    // respectfulness is only checked when a family improves the incumbent,
    // since each check costs a coloring decision
    auto respectful = [&](VertexSet coverage) {
        Graph rest = g.delete_vertices(coverage).graph;
        return colorable_with(rest, chi - int(family.size()));
    };
    auto dfs = [&](auto&& self, std::size_t start, VertexSet coverage) -> void {
        for (std::size_t i = start; i < sets.size(); ++i) {
            if (sets[i].intersects(coverage)) continue;
            family.push_back(sets[i]);
            VertexSet cov = coverage | sets[i];
            int rem = n - cov.size();
            if (rem < best_remainder && respectful(cov)) {
                best_remainder = rem;
                best.classes = family;
            }
            self(self, i + 1, cov);
            family.pop_back();
        }
    };
    dfs(dfs, 0, VertexSet{});

    RemainderReport report;
    report.partial = std::move(best);
    report.remainder = g.vertices() - report.partial.covered();
    report.remainder_order = best_remainder;
    report.class_count = int(report.partial.classes.size());
    report.remainder_chi = chi - report.class_count;
    return report;
}

}  // namespace chroma

#endif
