#include <doctest.h>

#include <vector>

#include "chroma/coloring.hpp"
#include "chroma/graph6.hpp"
#include "chroma/invariants.hpp"
#include "chroma/respectful.hpp"
#include "fixtures.hpp"

using namespace chroma;

namespace {

// Exhaustive oracle: the minimum remainder over every disjoint family of
// independent sets of size >= r that is respectful. Enumerates families
// directly from subsets, with no shared machinery with the search.
int brute_min_respectful_remainder(const Graph& g, int r) {
    int n = g.order();
    int chi = chromatic_number(g);
    std::vector<VertexSet> indep;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s{bits};
        if (s.size() < r) continue;
        bool ok = true;
        s.for_each([&](int v) {
            if (g.neighbors(v).intersects(s)) ok = false;
        });
        if (ok) indep.push_back(s);
    }
    int best = n;  // the empty family
    auto rec = [&](auto&& self, std::size_t from, VertexSet covered, int classes) -> void {
        if (classes > 0) {
            Graph rest = g.delete_vertices(covered).graph;
            if (chromatic_number(rest) == chi - classes)
                best = std::min(best, n - covered.size());
        }
        for (std::size_t i = from; i < indep.size(); ++i) {
            if (indep[i].intersects(covered)) continue;
            self(self, i + 1, covered | indep[i], classes + 1);
        }
    };
    rec(rec, 0, VertexSet{}, 0);
    return best;
}

}  // namespace

TEST_CASE("r-greedy predicate") {
    Graph c6 = fixtures::cycle(6);
    PartialColoring empty_family;
    CHECK(is_r_greedy(c6, empty_family, 3));  // vacuous

    PartialColoring one;
    one.classes = {VertexSet{0b010101}};  // {0,2,4}
    CHECK(is_r_greedy(c6, one, 3));

    Graph c5 = fixtures::cycle(5);
    PartialColoring small;
    small.classes = {VertexSet{0b00101}};  // {0,2}
    CHECK(!is_r_greedy(c5, small, 3));
    CHECK(is_r_greedy(c5, small, 2));

    PartialColoring bad;  // adjacent vertices in one class
    bad.classes = {VertexSet{0b00011}};
    CHECK_THROWS_AS(is_r_greedy(c5, bad, 1), std::invalid_argument);
}

TEST_CASE("respectful predicate") {
    Graph c6 = fixtures::cycle(6);
    PartialColoring empty_family;
    CHECK(is_respectful(c6, empty_family));  // chi == chi - 0

    PartialColoring one;
    one.classes = {VertexSet{0b010101}};
    CHECK(is_respectful(c6, one));  // remainder is independent: 1 == 2 - 1

    // C5 minus {0,2} keeps the edge 3-4: chi drops to 2 = 3 - 1, so even this
    // family extends to an optimal coloring
    Graph c5 = fixtures::cycle(5);
    PartialColoring pair;
    pair.classes = {VertexSet{0b00101}};
    CHECK(is_respectful(c5, pair));

    // C4 minus {0} is a path that still needs 2 colors: 2 != 2 - 1
    Graph c4 = fixtures::cycle(4);
    PartialColoring lone;
    lone.classes = {VertexSet{0b0001}};
    CHECK(!is_respectful(c4, lone));

    PartialColoring overlapping;
    overlapping.classes = {VertexSet{0b00101}, VertexSet{0b00100}};
    CHECK_THROWS_AS(is_respectful(c5, overlapping), std::invalid_argument);
}

TEST_CASE("minimal remainder fixtures") {
    // K4 has no independent set of size 3: only the empty family qualifies
    RemainderReport k4 = minimal_remainder_respectful(fixtures::complete(4), 3);
    CHECK(k4.class_count == 0);
    CHECK(k4.remainder_order == 4);
    CHECK(k4.remainder_chi == 4);

    RemainderReport c6 = minimal_remainder_respectful(fixtures::cycle(6), 3);
    CHECK(c6.class_count == 2);
    CHECK(c6.remainder_order == 0);
    CHECK(c6.remainder_chi == 0);
    CHECK(c6.partial.classes ==
          std::vector<VertexSet>{VertexSet{0b010101}, VertexSet{0b101010}});

    // alpha(C5) = 2 < 3, so only the empty family is 3-greedy
    RemainderReport c5 = minimal_remainder_respectful(fixtures::cycle(5), 3);
    CHECK(c5.class_count == 0);
    CHECK(c5.remainder_order == 5);

    CHECK_THROWS_AS(minimal_remainder_respectful(fixtures::empty(11), 3), std::invalid_argument);
    CHECK_THROWS_AS(minimal_remainder_respectful(fixtures::cycle(5), 0), std::invalid_argument);
}

TEST_CASE("minimal remainder witness is respectful, r-greedy, and minimal") {
    for (int n = 0; n <= 7; ++n) {
        for (const std::string& line : fixtures::catalog_lines(n)) {
            Graph g = decode_graph6(line);
            RemainderReport rep = minimal_remainder_respectful(g, 3);
            CHECK(is_r_greedy(g, rep.partial, 3));
            CHECK(is_respectful(g, rep.partial));
            CHECK(rep.remainder_order == g.order() - rep.partial.covered().size());
            CHECK(rep.remainder == g.vertices() - rep.partial.covered());
            CHECK(rep.remainder_order == brute_min_respectful_remainder(g, 3));
        }
    }
}

TEST_CASE("minimal witness structural consequences") {
    for (int n = 0; n <= 6; ++n) {
        for (const std::string& line : fixtures::catalog_lines(n)) {
            Graph g = decode_graph6(line);
            RemainderReport rep = minimal_remainder_respectful(g, 3);
            // each remainder vertex sees every class, so degrees drop by |C|
            rep.remainder.for_each([&](int v) {
                for (const VertexSet& cls : rep.partial.classes)
                    CHECK(g.neighbors(v).intersects(cls));
            });
            Graph rest = g.delete_vertices(rep.partial.covered()).graph;
            if (rep.remainder_order > 0)
                CHECK(max_degree(rest) <= max_degree(g) - rep.class_count);
            // optimal colorings of the remainder cannot afford classes of 3+
            CHECK(all_optimal_classes_at_most(rest, 2));
            // r-greedy classes cover at least 3 per class
            CHECK(rep.partial.covered().size() >= 3 * rep.class_count);
        }
    }
}
