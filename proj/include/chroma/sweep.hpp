#ifndef CHROMA_SWEEP_HPP
#define CHROMA_SWEEP_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "chroma/bounds.hpp"
#include "chroma/generate.hpp"
#include "chroma/graph6.hpp"
#include "chroma/invariants.hpp"

namespace chroma {

using json = nlohmann::ordered_json;

struct RandomSpec {
    int n = 0;
    double p = 0.5;
    std::uint64_t seed = 0;
    long count = 0;
    std::string echo;  // original "N,P,SEED,COUNT" text, echoed verbatim
};

/// Input selection (exactly one of path / exhaustive / random), bound
/// selection and the search guards for one batch run. Worker count and
/// timing are execution details: they never change results and are kept out
/// of the report so reruns are byte-identical.
struct SweepConfig {
    std::optional<std::string> input_path;  // "-" reads standard input
    std::optional<int> exhaustive_n;        // all labeled graphs, n = 0..N
    std::optional<RandomSpec> random;
    std::vector<BoundId> bounds;  // kept in catalog order
    int r = 3;
    int max_enum_n = 10;
    std::size_t tight_cap = 100;
    int jobs = 1;
    bool timing = false;
    std::ostream* echo_stream = &std::cerr;  // immediate violation echo; null silences
};

struct MalformedLine {
    long line_no = 0;
    std::string error;
};

struct SweepTotals {
    long input_lines = 0;
    long graphs = 0;  // input_lines - malformed
    std::vector<MalformedLine> malformed;
    std::vector<long> guard_skipped;  // parallel to config.bounds
};

struct PairTally {
    long both = 0;
    long graph_only = 0;
    long complement_only = 0;
    long neither = 0;
};

struct SweepReport {
    SweepConfig config;
    SlackStats stats;
    SweepTotals totals;
    PairTally pair_tally;
    std::optional<long> wall_time_ms;

    long proven_violations() const { return stats.total_violations(true); }
    json to_json() const;
};

namespace detail {

struct GraphOutcome {
    bool malformed = false;
    std::string error;
    std::string graph6;
    std::vector<std::optional<BoundVerdict>> verdicts;  // parallel to bound selection
};

inline bool bound_ready(const InvariantRecord& rec, const BoundSpec& spec) {
    if (spec.needs_iota && !rec.iota.has_value()) return false;
    if (spec.needs_small_classes && !rec.all_optimal_classes_le2.has_value()) return false;
    if (spec.needs_respectful && !rec.respectful.has_value()) return false;
    if (spec.needs_doubly_critical && !rec.has_doubly_critical_edge.has_value()) return false;
    return true;
}

inline GraphOutcome process_line(const std::string& line, const SweepConfig& cfg) {
    GraphOutcome out;
    Graph g;
    try {
        g = decode_graph6(line);
    } catch (const Graph6Error& e) {
        out.malformed = true;
        out.error = e.what();
        return out;
    }
    out.graph6 = encode_graph6(g);

    InvariantOptions opt;
    opt.with_iota = opt.with_doubly_critical = false;
    opt.with_small_classes = opt.with_respectful = false;
    opt.respectful_r = cfg.r;
    opt.enum_guard = cfg.max_enum_n;
    bool pair_selected = false;
    for (BoundId id : cfg.bounds) {
        const BoundSpec& spec = bound_spec(id);
        opt.with_iota |= spec.needs_iota;
        opt.with_doubly_critical |= spec.needs_doubly_critical;
        opt.with_small_classes |= spec.needs_small_classes;
        opt.with_respectful |= spec.needs_respectful;
        pair_selected |= spec.pair;
    }
    InvariantRecord rec = compute_invariants(g, opt);
    std::optional<InvariantRecord> rec_comp;
    if (pair_selected) {
        InvariantOptions basic;
        basic.with_iota = basic.with_doubly_critical = false;
        basic.with_small_classes = basic.with_respectful = false;
        rec_comp = compute_invariants(g.complement(), basic);
    }

    out.verdicts.reserve(cfg.bounds.size());
    for (BoundId id : cfg.bounds) {
        const BoundSpec& spec = bound_spec(id);
        if (spec.pair) {
            out.verdicts.push_back(evaluate_pair(rec, *rec_comp));
        } else if (bound_ready(rec, spec)) {
            out.verdicts.push_back(evaluate_bound(rec, spec));
        } else {
            out.verdicts.push_back(std::nullopt);  // search guard skipped this bound
        }
    }
    return out;
}

}  // namespace detail

/// Pull-based graph6 line source over a stream or a generator.
class LineSource {
public:
    static LineSource from_stream(std::istream& in) {
        LineSource s;
        s.next_ = [&in]() -> std::optional<std::string> {
            std::string line;
            if (!std::getline(in, line)) return std::nullopt;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        };
        return s;
    }

    static LineSource exhaustive(int max_n) {
        if (max_n < 0 || labeled_graph_mask_bits(max_n) > 63)
            throw std::invalid_argument("exhaustive generation supports n <= 11");
        LineSource s;
        auto n = std::make_shared<int>(0);
        auto mask = std::make_shared<std::uint64_t>(0);
        s.next_ = [n, mask, max_n]() -> std::optional<std::string> {
            while (*n <= max_n) {
                std::uint64_t total = std::uint64_t{1} << labeled_graph_mask_bits(*n);
                if (*mask < total) return encode_graph6(graph_from_mask(*n, (*mask)++));
                *n += 1;
                *mask = 0;
            }
            return std::nullopt;
        };
        return s;
    }

    static LineSource random(const RandomSpec& spec) {
        LineSource s;
        auto rng = std::make_shared<std::mt19937_64>(spec.seed);
        auto left = std::make_shared<long>(spec.count);
        int n = spec.n;
        double p = spec.p;
        s.next_ = [rng, left, n, p]() -> std::optional<std::string> {
            if (*left <= 0) return std::nullopt;
            --*left;
            return encode_graph6(random_graph(n, p, *rng));
        };
        return s;
    }

    std::optional<std::string> next() { return next_(); }

private:
    std::function<std::optional<std::string>()> next_;
};

/// Processes every input graph exactly once; aggregation runs in input
/// order, so the report does not depend on the worker count.
inline SweepReport run_sweep(const SweepConfig& cfg, LineSource source) {
    auto started = std::chrono::steady_clock::now();
    SweepReport report;
    report.config = cfg;
    report.stats = SlackStats(cfg.tight_cap);
    report.totals.guard_skipped.assign(cfg.bounds.size(), 0);

    constexpr std::size_t batch_size = 1024;
    std::vector<std::string> batch;
    std::vector<detail::GraphOutcome> outcomes;
    long line_no = 0;
    bool more = true;
    while (more) {
        batch.clear();
        while (batch.size() < batch_size) {
            std::optional<std::string> line = source.next();
            if (!line) {
                more = false;
                break;
            }
            batch.push_back(std::move(*line));
        }
        if (batch.empty()) break;
        outcomes.assign(batch.size(), detail::GraphOutcome{});
        int workers = std::max(1, cfg.jobs);
        if (workers == 1 || batch.size() == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                outcomes[i] = detail::process_line(batch[i], cfg);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&]() {
                    for (std::size_t i = cursor.fetch_add(1); i < batch.size();
                         i = cursor.fetch_add(1))
                        outcomes[i] = detail::process_line(batch[i], cfg);
                });
            for (std::thread& t : pool) t.join();
        }
        for (std::size_t i = 0; i < batch.size(); ++i) {
            ++line_no;
            ++report.totals.input_lines;
            detail::GraphOutcome& out = outcomes[i];
            if (out.malformed) {
                report.totals.malformed.push_back({line_no, out.error});
                if (cfg.echo_stream)
                    *cfg.echo_stream << "malformed line " << line_no << ": " << out.error << "\n";
                continue;
            }
            ++report.totals.graphs;
            for (std::size_t b = 0; b < cfg.bounds.size(); ++b) {
                if (!out.verdicts[b]) {
                    ++report.totals.guard_skipped[b];
                    continue;
                }
                const BoundVerdict& v = *out.verdicts[b];
                report.stats.add(out.graph6, v);
                if (v.sides) {
                    if (v.sides->graph_side_satisfied && v.sides->complement_side_satisfied)
                        ++report.pair_tally.both;
                    else if (v.sides->graph_side_satisfied)
                        ++report.pair_tally.graph_only;
                    else if (v.sides->complement_side_satisfied)
                        ++report.pair_tally.complement_only;
                    else
                        ++report.pair_tally.neither;
                }
                if (!v.satisfied && cfg.echo_stream) {
                    const BoundSpec& spec = bound_spec(v.id);
                    *cfg.echo_stream << (spec.conjecture ? "CRITICAL (conjecture violated) "
                                                         : "VIOLATION ")
                                     << spec.name << " graph6=" << out.graph6
                                     << " chi=" << v.lhs << " rhs=" << v.rhs.to_string() << "\n";
                }
            }
        }
    }
    if (cfg.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report.wall_time_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    return report;
}

inline json SweepReport::to_json() const {
    json j;
    json cfg_json;
    if (config.input_path) cfg_json["input"] = *config.input_path;
    if (config.exhaustive_n) cfg_json["exhaustive"] = *config.exhaustive_n;
    if (config.random) cfg_json["random"] = config.random->echo;
    json names = json::array();
    for (BoundId id : config.bounds) names.push_back(std::string(bound_spec(id).name));
    cfg_json["bounds"] = names;
    cfg_json["r"] = config.r;
    cfg_json["max_enum_n"] = config.max_enum_n;
    cfg_json["tight_cap"] = config.tight_cap;
    j["config"] = cfg_json;

    json catalog = json::array();
    for (BoundId id : config.bounds) {
        const BoundSpec& s = bound_spec(id);
        catalog.push_back({{"id", std::string(s.name)},
                           {"hypothesis", std::string(s.hypothesis)},
                           {"formula", std::string(s.formula)},
                           {"status", s.conjecture ? "conjecture" : "theorem"}});
    }
    j["catalog"] = catalog;

    json per_bound = json::array();
    for (std::size_t b = 0; b < config.bounds.size(); ++b) {
        BoundId id = config.bounds[b];
        const BoundSpec& spec = bound_spec(id);
        const BoundSummary* s = stats.find(id);
        json e;
        e["id"] = std::string(spec.name);
        e["evaluated"] = s ? s->evaluated : 0;
        e["hypothesis_hits"] = s ? s->hypothesis_hits : 0;
        e["satisfied"] = s ? s->satisfied : 0;
        json violations = json::array();
        if (s)
            for (const ViolationRecord& v : s->violations)
                violations.push_back({{"graph6", v.graph6},
                                      {"lhs", v.lhs},
                                      {"rhs", v.rhs.to_string()},
                                      {"slack", v.slack.to_string()}});
        e["violations"] = violations;
        e["min_slack"] = (s && s->min_slack) ? json(s->min_slack->to_string()) : json(nullptr);
        e["tight_count"] = s ? s->tight_count : 0;
        json tight = json::array();
        if (s)
            for (const std::string& t : s->tight) tight.push_back(t);
        e["tight"] = tight;
        e["guard_skipped"] = totals.guard_skipped[b];
        if (spec.pair)
            e["sides"] = {{"both", pair_tally.both},
                          {"graph_only", pair_tally.graph_only},
                          {"complement_only", pair_tally.complement_only},
                          {"neither", pair_tally.neither}};
        per_bound.push_back(e);
    }
    j["per_bound"] = per_bound;

    json totals_json;
    totals_json["input_lines"] = totals.input_lines;
    totals_json["malformed_lines"] = totals.malformed.size();
    totals_json["graphs"] = totals.graphs;
    json malformed = json::array();
    for (const MalformedLine& m : totals.malformed)
        malformed.push_back({{"line", m.line_no}, {"error", m.error}});
    totals_json["malformed"] = malformed;
    j["totals"] = totals_json;
    j["wall_time_ms"] = wall_time_ms ? json(*wall_time_ms) : json(nullptr);
    return j;
}

}  // namespace chroma

#endif
