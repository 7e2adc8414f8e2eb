// Command-line driver: per-graph invariant records, catalog-wide bound
// sweeps, and tight/violation witness extraction over graph6 input.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/bounds.hpp"
#include "chroma/graph6.hpp"
#include "chroma/invariants.hpp"
#include "chroma/sweep.hpp"

namespace {

using chroma::json;

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;
constexpr int exit_input = 3;

struct InputFlags {
    std::string input_path;
    int exhaustive_n = -1;
    std::string random_spec;
};

void add_input_flags(CLI::App* cmd, InputFlags& flags) {
    cmd->add_option("--input", flags.input_path, "graph6 file, one graph per line ('-' = stdin)");
    cmd->add_option("--exhaustive", flags.exhaustive_n,
                    "all labeled graphs with 0 <= n <= N (large above n = 6)");
    cmd->add_option("--random", flags.random_spec,
                    "N,P,SEED,COUNT: COUNT samples of G(N,P) from a 64-bit seed");
}

int parse_random(const std::string& text, chroma::RandomSpec& out, std::string& err) {
    std::istringstream in(text);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (fields.size() != 4) {
        err = "--random expects N,P,SEED,COUNT";
        return exit_usage;
    }
    try {
        out.n = std::stoi(fields[0]);
        out.p = std::stod(fields[1]);
        out.seed = std::stoull(fields[2]);
        out.count = std::stol(fields[3]);
    } catch (const std::exception&) {
        err = "--random fields must be numeric";
        return exit_usage;
    }
    if (out.n < 0 || out.n > 64 || out.p < 0.0 || out.p > 1.0 || out.count < 0) {
        err = "--random out of range (n <= 64, p in [0,1], count >= 0)";
        return exit_usage;
    }
    out.echo = text;
    return exit_ok;
}

int parse_bounds(const std::string& text, std::vector<chroma::BoundId>& out, std::string& err) {
    out.clear();
    if (text == "all" || text.empty()) {
        for (const chroma::BoundSpec& s : chroma::bound_catalog) out.push_back(s.id);
        return exit_ok;
    }
    std::istringstream in(text);
    std::string name;
    std::vector<std::string> names;
    while (std::getline(in, name, ',')) names.push_back(name);
    for (const chroma::BoundSpec& s : chroma::bound_catalog) {
        // selection keeps catalog order; repeats collapse
        if (std::find(names.begin(), names.end(), std::string(s.name)) != names.end())
            out.push_back(s.id);
    }
    for (const std::string& want : names) {
        if (!chroma::bound_id_from_name(want)) {
            err = "unknown bound id: " + want;
            return exit_usage;
        }
    }
    return exit_ok;
}

// Resolves the configured input into a line source. The returned stream
// must outlive the source.
int open_source(const InputFlags& flags, const chroma::SweepConfig& cfg,
                std::unique_ptr<std::ifstream>& file, chroma::LineSource& source,
                std::string& err) {
    int provided = int(!flags.input_path.empty()) + int(flags.exhaustive_n >= 0) +
                   int(!flags.random_spec.empty());
    if (provided != 1) {
        err = "choose exactly one input: --input, --exhaustive, or --random";
        return exit_usage;
    }
    if (!flags.input_path.empty()) {
        if (flags.input_path == "-") {
            source = chroma::LineSource::from_stream(std::cin);
            return exit_ok;
        }
        file = std::make_unique<std::ifstream>(flags.input_path);
        if (!*file) {
            err = "cannot open input file: " + flags.input_path;
            return exit_input;
        }
        source = chroma::LineSource::from_stream(*file);
        return exit_ok;
    }
    if (flags.exhaustive_n >= 0) {
        if (chroma::labeled_graph_mask_bits(flags.exhaustive_n) > 63) {
            err = "--exhaustive supports n <= 11";
            return exit_usage;
        }
        source = chroma::LineSource::exhaustive(flags.exhaustive_n);
        return exit_ok;
    }
    source = chroma::LineSource::random(*cfg.random);
    return exit_ok;
}

// Generated inputs must stay within the search guards for the selected
// bounds; file inputs are checked per graph instead.
int check_guards(const InputFlags& flags, const chroma::SweepConfig& cfg, std::string& err) {
    bool guarded = false, respectful = false;
    for (chroma::BoundId id : cfg.bounds) {
        const chroma::BoundSpec& s = chroma::bound_spec(id);
        guarded |= s.needs_iota || s.needs_small_classes || s.needs_respectful;
        respectful |= s.needs_respectful;
    }
    if (!guarded) return exit_ok;
    int generated_n = -1;
    if (flags.exhaustive_n >= 0) generated_n = flags.exhaustive_n;
    if (cfg.random) generated_n = cfg.random->n;
    if (generated_n < 0) return exit_ok;
    if (generated_n > cfg.max_enum_n) {
        err = "generated order exceeds --max-enum-n for the selected bounds";
        return exit_usage;
    }
    if (respectful && generated_n > 10) {
        err = "RESPECTFUL_HALF requires n <= 10";
        return exit_usage;
    }
    return exit_ok;
}

json rational_json(const chroma::Rational& r) { return json(r.to_string()); }

json vertex_set_json(chroma::VertexSet s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

json record_json(const std::string& graph6, const chroma::Graph& g,
                 const chroma::InvariantRecord& rec) {
    json j;
    j["graph6"] = graph6;
    j["n"] = rec.n;
    j["edge_count"] = g.edge_count();
    j["chi"] = rec.chi;
    j["omega"] = rec.omega;
    j["alpha"] = rec.alpha;
    j["delta"] = rec.delta;
    j["iota"] = rec.iota ? json(*rec.iota) : json(nullptr);
    if (rec.has_doubly_critical_edge && *rec.has_doubly_critical_edge) {
        j["doubly_critical_edge"] = {rec.doubly_critical_witness->first,
                                     rec.doubly_critical_witness->second};
    } else {
        j["doubly_critical_edge"] = nullptr;
    }
    j["all_optimal_classes_le2"] =
        rec.all_optimal_classes_le2 ? json(*rec.all_optimal_classes_le2) : json(nullptr);
    if (rec.respectful) {
        json r;
        r["r"] = rec.respectful_r;
        r["class_count"] = rec.respectful->class_count;
        json classes = json::array();
        for (const chroma::VertexSet& cls : rec.respectful->partial.classes)
            classes.push_back(vertex_set_json(cls));
        r["classes"] = classes;
        r["remainder"] = vertex_set_json(rec.respectful->remainder);
        r["remainder_order"] = rec.respectful->remainder_order;
        r["remainder_chi"] = rec.respectful->remainder_chi;
        j["respectful_greedy"] = r;
    } else {
        j["respectful_greedy"] = nullptr;
    }
    return j;
}

int cmd_invariants(const InputFlags& flags, const std::vector<std::string>& graphs, int r,
                   int max_enum_n) {
    std::vector<std::string> lines = graphs;
    if (!flags.input_path.empty()) {
        std::unique_ptr<std::ifstream> file;
        chroma::LineSource source;
        std::string err;
        chroma::SweepConfig dummy;
        int rc = open_source(flags, dummy, file, source, err);
        if (rc != exit_ok) {
            std::cerr << "error: " << err << "\n";
            return rc;
        }
        while (auto line = source.next()) lines.push_back(*line);
    }
    if (lines.empty()) {
        std::cerr << "error: no graphs given (pass graph6 strings or --input)\n";
        return exit_usage;
    }
    chroma::InvariantOptions opt;
    opt.respectful_r = r;
    opt.enum_guard = max_enum_n;
    for (const std::string& line : lines) {
        chroma::Graph g;
        try {
            g = chroma::decode_graph6(line);
        } catch (const chroma::Graph6Error& e) {
            std::cerr << "error: " << e.what() << " in \"" << line << "\"\n";
            return exit_input;
        }
        chroma::InvariantRecord rec = chroma::compute_invariants(g, opt);
        std::cout << record_json(chroma::encode_graph6(g), g, rec).dump() << "\n";
    }
    return exit_ok;
}

void print_summary_table(const chroma::SweepReport& report) {
    std::ostream& out = std::cerr;
    out << "bound             evaluated      hits satisfied violations  min_slack  tight\n";
    for (std::size_t b = 0; b < report.config.bounds.size(); ++b) {
        chroma::BoundId id = report.config.bounds[b];
        const chroma::BoundSpec& spec = chroma::bound_spec(id);
        const chroma::BoundSummary* s = report.stats.find(id);
        char line[160];
        std::snprintf(line, sizeof line, "%-17s %9ld %9ld %9ld %10zu %10s %6ld\n",
                      std::string(spec.name).c_str(), s ? s->evaluated : 0L,
                      s ? s->hypothesis_hits : 0L, s ? s->satisfied : 0L,
                      s ? s->violations.size() : std::size_t{0},
                      (s && s->min_slack) ? s->min_slack->to_string().c_str() : "-",
                      s ? s->tight_count : 0L);
        out << line;
    }
    out << "lines=" << report.totals.input_lines << " graphs=" << report.totals.graphs
        << " malformed=" << report.totals.malformed.size() << "\n";
}

int emit_report(const chroma::SweepReport& report, const std::string& out_path) {
    std::string text = report.to_json().dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return exit_input;
        }
        out << text;
    }
    return exit_ok;
}

int cmd_sweep(const InputFlags& flags, chroma::SweepConfig& cfg, const std::string& out_path) {
    std::string err;
    int rc = check_guards(flags, cfg, err);
    if (rc == exit_ok) {
        std::unique_ptr<std::ifstream> file;
        chroma::LineSource source;
        rc = open_source(flags, cfg, file, source, err);
        if (rc == exit_ok) {
            if (!flags.input_path.empty()) cfg.input_path = flags.input_path;
            if (flags.exhaustive_n >= 0) cfg.exhaustive_n = flags.exhaustive_n;
            auto started = std::chrono::steady_clock::now();
            chroma::SweepReport report = run_sweep(cfg, std::move(source));
            auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
            print_summary_table(report);
            std::cerr << "wall_time_ms=" << wall << "\n";
            int emit_rc = emit_report(report, out_path);
            if (emit_rc != exit_ok) return emit_rc;
            return report.proven_violations() > 0 ? exit_violation : exit_ok;
        }
    }
    std::cerr << "error: " << err << "\n";
    return rc;
}

int cmd_witness(const InputFlags& flags, chroma::SweepConfig& cfg, const std::string& bound_name,
                const std::string& mode) {
    std::optional<chroma::BoundId> id = chroma::bound_id_from_name(bound_name);
    if (!id) {
        std::cerr << "error: unknown bound id: " << bound_name << "\n";
        return exit_usage;
    }
    if (mode != "tight" && mode != "violation") {
        std::cerr << "error: --mode must be tight or violation\n";
        return exit_usage;
    }
    cfg.bounds = {*id};
    cfg.tight_cap = std::size_t(-1);  // witness extraction wants everything
    std::string err;
    int rc = check_guards(flags, cfg, err);
    if (rc == exit_ok) {
        std::unique_ptr<std::ifstream> file;
        chroma::LineSource source;
        rc = open_source(flags, cfg, file, source, err);
        if (rc == exit_ok) {
            chroma::SweepReport report = run_sweep(cfg, std::move(source));
            const chroma::BoundSummary* s = report.stats.find(*id);
            std::vector<std::string> out;
            if (s) {
                if (mode == "tight")
                    out = s->tight;
                else
                    for (const chroma::ViolationRecord& v : s->violations)
                        out.push_back(v.graph6);
            }
            std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
                return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
            for (const std::string& g6 : out) std::cout << g6 << "\n";
            return report.proven_violations() > 0 ? exit_violation : exit_ok;
        }
    }
    std::cerr << "error: " << err << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact chromatic-number bound verification over graph6 catalogs"};
    app.require_subcommand(1);

    InputFlags inv_flags, sweep_flags, wit_flags;
    std::vector<std::string> inv_graphs;
    std::string bounds_text = "all";
    std::string out_path;
    std::string wit_bound, wit_mode = "tight";
    int r = 3, jobs = 1, max_enum_n = 10;
    long tight_cap = 100;
    bool timing = false;

    CLI::App* inv = app.add_subcommand("invariants", "per-graph invariant records (JSON lines)");
    inv->add_option("graph6", inv_graphs, "graph6 strings");
    inv->add_option("--input", inv_flags.input_path, "graph6 file ('-' = stdin)");
    inv->add_option("--r", r, "class-size floor for the respectful search");
    inv->add_option("--max-enum-n", max_enum_n, "guard for iota/enumeration searches");

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate bounds over a catalog; JSON report");
    add_input_flags(sweep, sweep_flags);
    sweep->add_option("--bounds", bounds_text, "comma-separated bound ids, or 'all'");
    sweep->add_option("--r", r, "class-size floor for the respectful search");
    sweep->add_option("--jobs", jobs, "worker threads (does not affect the report)");
    sweep->add_option("--max-enum-n", max_enum_n, "guard for iota/enumeration searches");
    sweep->add_option("--out", out_path, "report path (default: stdout)");
    sweep->add_option("--tight-cap", tight_cap, "max tight witnesses kept per bound");
    sweep->add_flag("--timing", timing, "include wall_time_ms in the report");

    CLI::App* wit = app.add_subcommand("witness", "list tight or violating graphs for one bound");
    wit->add_option("bound", wit_bound, "bound id")->required();
    wit->add_option("--mode", wit_mode, "tight|violation");
    add_input_flags(wit, wit_flags);
    wit->add_option("--r", r, "class-size floor for the respectful search");
    wit->add_option("--jobs", jobs, "worker threads");
    wit->add_option("--max-enum-n", max_enum_n, "guard for iota/enumeration searches");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    chroma::SweepConfig cfg;
    cfg.r = r;
    cfg.jobs = jobs;
    cfg.max_enum_n = max_enum_n;
    cfg.tight_cap = std::size_t(tight_cap < 0 ? 0 : tight_cap);
    cfg.timing = timing;
    std::string err;

    try {
        if (inv->parsed()) return cmd_invariants(inv_flags, inv_graphs, r, max_enum_n);
        if (sweep->parsed()) {
            int rc = parse_bounds(bounds_text, cfg.bounds, err);
            if (rc != exit_ok) {
                std::cerr << "error: " << err << "\n";
                return rc;
            }
            if (!sweep_flags.random_spec.empty()) {
                chroma::RandomSpec rnd;
                rc = parse_random(sweep_flags.random_spec, rnd, err);
                if (rc != exit_ok) {
                    std::cerr << "error: " << err << "\n";
                    return rc;
                }
                cfg.random = rnd;
            }
            return cmd_sweep(sweep_flags, cfg, out_path);
        }
        if (wit->parsed()) {
            if (!wit_flags.random_spec.empty()) {
                chroma::RandomSpec rnd;
                int rc = parse_random(wit_flags.random_spec, rnd, err);
                if (rc != exit_ok) {
                    std::cerr << "error: " << err << "\n";
                    return rc;
                }
                cfg.random = rnd;
            }
            return cmd_witness(wit_flags, cfg, wit_bound, wit_mode);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
