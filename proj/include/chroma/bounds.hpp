#ifndef CHROMA_BOUNDS_HPP
#define CHROMA_BOUNDS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chroma/invariants.hpp"
#include "chroma/rational.hpp"

namespace chroma {

// Catalog of upper bounds on the chromatic number, each guarded by a
// hypothesis decidable from the invariant record. Every bound except REED is
// a theorem; REED is a conjecture, so its violations are reported rather
// than treated as errors. All right-hand sides are exact rationals.
enum class BoundId {
    reed,
    dc_third,
    chi_big_reed,
    alpha2_reed,
    smallclass_reed,
    iota_avg,
    respectful_half,
    key,
    main_disjunct,
    cor_half,
    cor_half_minus,
    main_result,
    stingy_reed,
    eighth_disjunct,
};

struct BoundSpec {
    BoundId id;
    std::string_view name;
    std::string_view hypothesis;
    std::string_view formula;
    bool conjecture = false;
    bool pair = false;  // evaluated on G together with its complement
    bool needs_iota = false;
    bool needs_small_classes = false;
    bool needs_respectful = false;
    bool needs_doubly_critical = false;
};

inline constexpr std::array<BoundSpec, 14> bound_catalog{{
    {BoundId::reed, "REED", "always", "chi <= ceil((omega + Delta + 1)/2)",
     true, false, false, false, false, false},
    {BoundId::dc_third, "DC_THIRD", "G has a doubly critical edge",
     "chi <= omega/3 + 2*(Delta + 1)/3", false, false, false, false, false, true},
    {BoundId::chi_big_reed, "CHI_BIG_REED", "chi > ceil(n/2)",
     "chi <= (omega + Delta + 1)/2", false, false, false, false, false, false},
    {BoundId::alpha2_reed, "ALPHA2_REED", "alpha <= 2",
     "chi <= ceil((omega + Delta + 1)/2)", false, false, false, false, false, false},
    {BoundId::smallclass_reed, "SMALLCLASS_REED",
     "every optimal coloring has classes of size <= 2",
     "chi <= ceil((omega + Delta + 1)/2)", false, false, false, true, false, false},
    {BoundId::iota_avg, "IOTA_AVG", "always", "chi <= (iota + n)/2",
     false, false, true, false, false, false},
    {BoundId::respectful_half, "RESPECTFUL_HALF",
     "always; |C| is the minimal-remainder respectful r-greedy family",
     "chi <= (omega + Delta + 1)/2 + (|C| + 1)/2", false, false, false, false, true, false},
    {BoundId::key, "KEY", "always", "chi <= (iota + omega + Delta + n + 2)/4",
     false, false, true, false, false, false},
    {BoundId::main_disjunct, "MAIN_DISJUNCT", "always (disjunction)",
     "chi <= omega/3 + 2*(Delta + 1)/3 or chi <= (omega + n + Delta + 3)/4",
     false, false, true, false, false, false},
    {BoundId::cor_half, "COR_HALF", "Delta >= n/2",
     "chi <= omega/4 + 3*(Delta + 1)/4", false, false, false, false, false, false},
    {BoundId::cor_half_minus, "COR_HALF_MINUS", "Delta >= (n - 1)/2",
     "chi <= omega/4 + 3*Delta/4 + 1", false, false, false, false, false, false},
    {BoundId::main_result, "MAIN_RESULT", "always (checked on G and its complement)",
     "chi <= omega/4 + 3*Delta/4 + 1 for G or for its complement",
     false, true, false, false, false, false},
    {BoundId::stingy_reed, "STINGY_REED", "iota > omega/2",
     "chi <= (omega + Delta + 1)/2", false, false, true, false, false, false},
    {BoundId::eighth_disjunct, "EIGHTH_DISJUNCT", "always (disjunction)",
     "chi <= (omega + Delta + 1)/2 or chi <= 3*omega/8 + (n + Delta + 2)/4",
     false, false, true, false, false, false},
}};

inline const BoundSpec& bound_spec(BoundId id) {
    for (const BoundSpec& s : bound_catalog)
        if (s.id == id) return s;
    throw std::logic_error("unknown bound id");
}

inline std::optional<BoundId> bound_id_from_name(std::string_view name) {
    for (const BoundSpec& s : bound_catalog)
        if (s.name == name) return s.id;
    return std::nullopt;
}

/// Per-side detail for the complement-paired check.
struct PairSides {
    int lhs_graph = 0;
    int lhs_complement = 0;
    Rational rhs_graph;
    Rational rhs_complement;
    Rational slack_graph;
    Rational slack_complement;
    bool graph_side_satisfied = false;
    bool complement_side_satisfied = false;
};

struct BoundVerdict {
    BoundId id{};
    bool hypothesis_holds = false;
    int lhs = 0;             // chi of the graph under test
    Rational rhs;            // for disjunctions/pairs: the larger branch
    bool satisfied = false;  // vacuously true when the hypothesis fails
    Rational slack;          // rhs - lhs
    bool tight = false;      // hypothesis holds, satisfied, slack == 0
    std::optional<PairSides> sides;
};

namespace detail {

inline int require_iota(const InvariantRecord& rec) {
    if (!rec.iota) throw std::invalid_argument("bound requires iota, not computed for this record");
    return *rec.iota;
}

inline BoundVerdict finish(BoundId id, bool hyp, int lhs, Rational rhs) {
    BoundVerdict v;
    v.id = id;
    v.hypothesis_holds = hyp;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = rhs - Rational(lhs);
    v.satisfied = !hyp || v.slack >= Rational(0);
    v.tight = hyp && v.satisfied && v.slack == Rational(0);
    return v;
}

}  // namespace detail

inline BoundVerdict evaluate_bound(const InvariantRecord& rec, const BoundSpec& spec) {
    using detail::finish;
    const int n = rec.n, chi = rec.chi, omega = rec.omega, alpha = rec.alpha, delta = rec.delta;
    const Rational half_reed{omega + delta + 1, 2};
    const Rational half_reed_ceil{half_reed.ceil()};
    switch (spec.id) {
        case BoundId::reed:
            return finish(spec.id, true, chi, half_reed_ceil);
        case BoundId::dc_third: {
            if (!rec.has_doubly_critical_edge)
                throw std::invalid_argument("bound requires the doubly-critical-edge flag");
            return finish(spec.id, *rec.has_doubly_critical_edge, chi,
                          Rational(omega + 2 * delta + 2, 3));
        }
        case BoundId::chi_big_reed:
            return finish(spec.id, chi > Rational(n, 2).ceil(), chi, half_reed);
        case BoundId::alpha2_reed:
            return finish(spec.id, alpha <= 2, chi, half_reed_ceil);
        case BoundId::smallclass_reed: {
            if (!rec.all_optimal_classes_le2)
                throw std::invalid_argument("bound requires the small-class predicate");
            return finish(spec.id, *rec.all_optimal_classes_le2, chi, half_reed_ceil);
        }
        case BoundId::iota_avg:
            return finish(spec.id, true, chi, Rational(detail::require_iota(rec) + n, 2));
        case BoundId::respectful_half: {
            if (!rec.respectful)
                throw std::invalid_argument("bound requires the minimal-remainder report");
            int classes = rec.respectful->class_count;
            return finish(spec.id, true, chi, Rational(omega + delta + classes + 2, 2));
        }
        case BoundId::key:
            return finish(spec.id, true, chi,
                          Rational(detail::require_iota(rec) + omega + delta + n + 2, 4));
        case BoundId::main_disjunct:
            return finish(spec.id, true, chi,
                          std::max(Rational(omega + 2 * delta + 2, 3),
                                   Rational(omega + n + delta + 3, 4)));
        case BoundId::cor_half:
            return finish(spec.id, 2 * delta >= n, chi, Rational(omega + 3 * delta + 3, 4));
        case BoundId::cor_half_minus:
            return finish(spec.id, 2 * delta >= n - 1, chi, Rational(omega + 3 * delta + 4, 4));
        case BoundId::stingy_reed:
            return finish(spec.id, 2 * detail::require_iota(rec) > omega, chi, half_reed);
        case BoundId::eighth_disjunct:
            return finish(spec.id, true, chi,
                          std::max(half_reed, Rational(3 * omega + 2 * n + 2 * delta + 4, 8)));
        case BoundId::main_result:
            throw std::invalid_argument("MAIN_RESULT is a pair check; use evaluate_pair");
    }
    throw std::logic_error("unhandled bound id");
}

/// The complement-paired check: at least one of G and its complement must
/// satisfy chi <= omega/4 + 3*Delta/4 + 1. Also checks the pigeonhole
/// premise max(Delta, co-Delta) >= (n-1)/2, which holds for every graph.
inline BoundVerdict evaluate_pair(const InvariantRecord& rec_g, const InvariantRecord& rec_comp) {
    if (rec_g.n != rec_comp.n)
        throw std::invalid_argument("pair records disagree on the graph order");
    if (2 * std::max(rec_g.delta, rec_comp.delta) < rec_g.n - 1)
        throw std::logic_error("pigeonhole premise failed: records are not a complement pair");

    PairSides sides;
    sides.lhs_graph = rec_g.chi;
    sides.lhs_complement = rec_comp.chi;
    sides.rhs_graph = Rational(rec_g.omega + 3 * rec_g.delta + 4, 4);
    sides.rhs_complement = Rational(rec_comp.omega + 3 * rec_comp.delta + 4, 4);
    sides.slack_graph = sides.rhs_graph - Rational(rec_g.chi);
    sides.slack_complement = sides.rhs_complement - Rational(rec_comp.chi);
    sides.graph_side_satisfied = sides.slack_graph >= Rational(0);
    sides.complement_side_satisfied = sides.slack_complement >= Rational(0);

    BoundVerdict v;
    v.id = BoundId::main_result;
    v.hypothesis_holds = true;
    v.lhs = rec_g.chi;
    v.slack = std::max(sides.slack_graph, sides.slack_complement);
    v.rhs = Rational(v.lhs) + v.slack;
    v.satisfied = sides.graph_side_satisfied || sides.complement_side_satisfied;
    v.tight = v.satisfied && v.slack == Rational(0);
    v.sides = sides;
    return v;
}

/// Aggregation of verdict streams: per-bound violation and tightness
/// witnesses, minimum slack over hypothesis hits, and hit counters so a
/// vacuously satisfied conditional bound is never mistaken for an exercised
/// one.
struct ViolationRecord {
    std::string graph6;
    int lhs = 0;
    Rational rhs;
    Rational slack;
};

struct BoundSummary {
    BoundId id{};
    long evaluated = 0;
    long hypothesis_hits = 0;
    long satisfied = 0;
    std::vector<ViolationRecord> violations;
    std::optional<Rational> min_slack;  // over verdicts whose hypothesis holds
    long tight_count = 0;
    std::vector<std::string> tight;  // graph6 witnesses, capped at tight_cap
};

class SlackStats {
public:
    explicit SlackStats(std::size_t tight_cap = 100) : tight_cap_(tight_cap) {}

    void add(const std::string& graph6, const BoundVerdict& v) {
        BoundSummary& s = summary_for(v.id);
        ++s.evaluated;
        if (v.satisfied) ++s.satisfied;
        if (v.hypothesis_holds) {
            ++s.hypothesis_hits;
            if (!s.min_slack || v.slack < *s.min_slack) s.min_slack = v.slack;
            if (!v.satisfied) s.violations.push_back({graph6, v.lhs, v.rhs, v.slack});
            if (v.tight) {
                ++s.tight_count;
                if (s.tight.size() < tight_cap_) s.tight.push_back(graph6);
            }
        }
    }

    const std::vector<BoundSummary>& summaries() const { return summaries_; }

    const BoundSummary* find(BoundId id) const {
        for (const BoundSummary& s : summaries_)
            if (s.id == id) return &s;
        return nullptr;
    }

    long total_violations(bool proven_only) const {
        long total = 0;
        for (const BoundSummary& s : summaries_)
            if (!proven_only || !bound_spec(s.id).conjecture) total += long(s.violations.size());
        return total;
    }

private:
    BoundSummary& summary_for(BoundId id) {
        for (BoundSummary& s : summaries_)
            if (s.id == id) return s;
        summaries_.push_back(BoundSummary{});
        summaries_.back().id = id;
        return summaries_.back();
    }

    std::size_t tight_cap_;
    std::vector<BoundSummary> summaries_;
};

}  // namespace chroma

#endif
