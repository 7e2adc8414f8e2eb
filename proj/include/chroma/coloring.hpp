#ifndef CHROMA_COLORING_HPP
#define CHROMA_COLORING_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chroma/chromatic.hpp"
#include "chroma/clique.hpp"

namespace chroma {

struct ColoringEnumeration {
    std::vector<Coloring> colorings;
    bool complete = true;  // false when the budget cut the enumeration short
};

namespace detail {

// Restricted-growth enumeration of partitions of V into exactly chi
// independent classes: vertex v may join an existing compatible class or
// open the next one, so each partition is produced exactly once and classes
// are indexed by ascending minimum member.
class OptimalColoringEnumerator {
public:
    OptimalColoringEnumerator(const Graph& g, int chi, std::size_t budget)
        : g_(g), n_(g.order()), chi_(chi), budget_(budget) {}

    ColoringEnumeration run() {
        out_.colorings.clear();
        out_.complete = true;
        classes_.assign(std::size_t(std::max(chi_, 1)), VertexSet{});
        rec(0, 0);
        return std::move(out_);
    }

private:
    bool rec(int v, int used) {
        if (v == n_) {
            if (used != chi_) return true;
            if (out_.colorings.size() == budget_) {
                out_.complete = false;
                return false;
            }
            Coloring c;
            c.classes.assign(classes_.begin(), classes_.begin() + used);
            out_.colorings.push_back(std::move(c));
            return true;
        }
        if (used + (n_ - v) < chi_) return true;  // cannot open enough classes
        int limit = std::min(used, chi_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if (g_.neighbors(v).intersects(classes_[std::size_t(c)])) continue;
            classes_[std::size_t(c)].add(v);
            bool go = rec(v + 1, c == used ? used + 1 : used);
            classes_[std::size_t(c)].remove(v);
            if (!go) return false;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    int chi_;
    std::size_t budget_;
    std::vector<VertexSet> classes_;
    ColoringEnumeration out_;
};

inline void check_enum_guard(const Graph& g) {
    if (g.order() > 10)
        throw std::invalid_argument("optimal-coloring enumeration guarded to n <= 10");
}

}  // namespace detail

/// All proper colorings of g that use exactly chromatic_number(g) classes,
/// without duplicates, sorted by their canonical class lists. At most
/// `budget` colorings are returned; `complete` reports whether that sufficed.
inline ColoringEnumeration enumerate_optimal_colorings(const Graph& g, std::size_t budget) {
    detail::check_enum_guard(g);
    int chi = chromatic_number(g);
    ColoringEnumeration e = detail::OptimalColoringEnumerator(g, chi, budget).run();
    std::sort(e.colorings.begin(), e.colorings.end(), [](const Coloring& a, const Coloring& b) {
        return std::lexicographical_compare(a.classes.begin(), a.classes.end(),
                                            b.classes.begin(), b.classes.end(), set_lex_less);
    });
    return e;
}

struct IotaResult {
    int iota = 0;
    Coloring witness;  // a stingy coloring: iota singletons, other classes of size >= 2
};

namespace detail {

// Search for an optimal coloring with exactly t singleton classes: pick the
// singleton set S, then ask whether G - S is (chi - t)-colorable. Downward
// iteration on t makes the first feasible t the maximum.
inline bool stingy_at(const Graph& g, int chi, int t, Coloring& out) {
    int n = g.order();
    std::vector<int> pick(static_cast<std::size_t>(t), 0);
    // lexicographic enumeration of t-subsets
    auto attempt = [&](VertexSet s) -> bool {
        Graph::Induced rest = g.delete_vertices(s);
        std::optional<Coloring> sub = try_coloring(rest.graph, chi - t);
        if (!sub) return false;
        out.classes.clear();
        s.for_each([&](int v) { out.classes.push_back(VertexSet::single(v)); });
        for (const VertexSet& cls : sub->classes) {
            VertexSet mapped;
            cls.for_each([&](int v) { mapped.add(rest.new_to_old[std::size_t(v)]); });
            out.classes.push_back(mapped);
        }
        out.canonicalize();
        return true;
    };
    if (t == 0) return attempt(VertexSet{});
    int k = 0;
    pick[0] = 0;
    while (k >= 0) {
        if (pick[std::size_t(k)] > n - (t - k)) {
            if (--k >= 0) ++pick[std::size_t(k)];
            continue;
        }
        if (k == t - 1) {
            VertexSet s;
            for (int i = 0; i < t; ++i) s.add(pick[std::size_t(i)]);
            if (attempt(s)) return true;
            ++pick[std::size_t(k)];
        } else {
            pick[std::size_t(k + 1)] = pick[std::size_t(k)] + 1;
            ++k;
        }
    }
    return false;
}

}  // namespace detail

/// Stinginess: the maximum number of singleton color classes over all
/// optimal colorings, with a witness attaining it.
inline IotaResult iota_with_witness(const Graph& g) {
    int chi = chromatic_number(g);
    int n = g.order();
    IotaResult r;
    for (int t = chi; t >= 0; --t) {
        // a first-feasible t has all non-singleton classes of size >= 2
        if (n - t < 2 * (chi - t)) continue;
        if (detail::stingy_at(g, chi, t, r.witness)) {
            r.iota = t;
            return r;
        }
    }
    throw std::logic_error("stinginess search exhausted without a witness");
}

inline int iota(const Graph& g) { return iota_with_witness(g).iota; }

/// True iff c is an optimal coloring attaining the maximum singleton count.
inline bool is_stingy(const Graph& g, const Coloring& c) {
    if (!is_valid_coloring(g, c))
        throw std::invalid_argument("coloring is not a valid coloring of the graph");
    if (int(c.classes.size()) != chromatic_number(g)) return false;
    return c.singleton_count() == iota(g);
}

namespace detail {

// Merge an independent set into one vertex; a coloring of the result with
// chi(g) colors is exactly an optimal coloring of g keeping the set
// monochromatic.
inline Graph contract_independent_set(const Graph& g, VertexSet s) {
    Graph::Induced rest = g.delete_vertices(s);
    int m = rest.graph.order();
    std::vector<VertexSet> rows(std::size_t(m) + 1);
    for (int v = 0; v < m; ++v) rows[std::size_t(v)] = rest.graph.neighbors(v);
    VertexSet merged_nbrs;
    s.for_each([&](int v) { merged_nbrs |= g.neighbors(v); });
    (merged_nbrs - s).for_each([&](int w) {
        int nw = rest.old_to_new[std::size_t(w)];
        rows[std::size_t(nw)].add(m);
        rows[std::size_t(m)].add(nw);
    });
    return Graph::from_adjacency(m + 1, rows);
}

template <class Fn>
bool for_each_independent_set_of_size(const Graph& g, int size, Fn&& fn) {
    // ascending-member backtracking; sets visited in member-lex order
    int n = g.order();
    auto rec = [&](auto&& self, VertexSet cur, int count, int last) -> bool {
        if (count == size) return fn(cur);
        for (int v = last + 1; v < n; ++v) {
            if (g.neighbors(v).intersects(cur)) continue;
            VertexSet nxt = cur;
            nxt.add(v);
            if (!self(self, nxt, count + 1, v)) return false;
        }
        return true;
    };
    return rec(rec, VertexSet{}, 0, -1);
}

}  // namespace detail

/// True iff every optimal coloring of g has all classes of size at most k.
/// Refutation search: a class of size > k exists in some optimal coloring
/// iff some independent (k+1)-set can be kept monochromatic at chi colors.
inline bool all_optimal_classes_at_most(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("class-size threshold must be >= 1");
    if (independence_number(g) <= k) return true;
    int chi = chromatic_number(g);
    return detail::for_each_independent_set_of_size(g, k + 1, [&](VertexSet s) {
        return !colorable_with(detail::contract_independent_set(g, s), chi);
    });
}

}  // namespace chroma

#endif
