#include "iset/cli.hpp"

#include "iset/aks.hpp"
#include "iset/bounds.hpp"
#include "iset/ensemble.hpp"
#include "iset/errors.hpp"
#include "iset/exact.hpp"
#include "iset/io.hpp"
#include "iset/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

namespace iset::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const unsigned long long value = std::stoull(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw InputError("invalid " + what + ": '" + text + "'");
    }
}

double parse_probability(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double value = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw InputError("invalid " + what + ": '" + text + "'");
    }
}

// Generator spec grammar: name:key=val,key=val with names
// {gnp, bipartite, tfp, clique-union}.
Graph build_from_spec(const std::string& spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            const auto comma = rest.find(',', start);
            const std::string item =
                rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!item.empty()) {
                const auto eq = item.find('=');
                if (eq == std::string::npos)
                    throw InputError("generator spec: expected key=val, got '" + item + "'");
                kv[item.substr(0, eq)] = item.substr(eq + 1);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    auto need = [&](const char* key) -> std::string {
        const auto it = kv.find(key);
        if (it == kv.end())
            throw InputError("generator spec '" + name + "': missing key '" + key + "'");
        return it->second;
    };
    auto reject_unknown = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : kv) {
            bool known = false;
            for (const char* a : allowed)
                if (key == a) known = true;
            if (!known) throw InputError("generator spec '" + name + "': unknown key '" + key + "'");
        }
    };

    if (name == "gnp") {
        reject_unknown({"n", "p"});
        return gen_gnp(parse_u64(need("n"), "n"), parse_probability(need("p"), "p"), seed);
    }
    if (name == "bipartite") {
        reject_unknown({"l", "r", "p"});
        return gen_bipartite(parse_u64(need("l"), "l"), parse_u64(need("r"), "r"),
                             parse_probability(need("p"), "p"), seed);
    }
    if (name == "tfp") {
        reject_unknown({"n"});
        return gen_triangle_free_process(parse_u64(need("n"), "n"), seed);
    }
    if (name == "clique-union") {
        reject_unknown({"r", "k"});
        return gen_clique_union(parse_u64(need("r"), "r"), parse_u64(need("k"), "k"));
    }
    throw InputError("unknown generator '" + name +
                     "' (expected gnp, bipartite, tfp, or clique-union)");
}

std::string rational_str(const Rational& r) {
    return r.str();
}

Json graph_stats_json(const Graph& g) {
    Json stats;
    stats["n"] = g.vertex_count();
    stats["edges"] = g.edge_count();
    stats["avg_degree"] = g.average_degree_approx();
    stats["avg_degree_exact"] = rational_str(g.average_degree());
    stats["max_degree"] = g.max_degree();
    stats["triangle_free"] = is_triangle_free(g);
    return stats;
}

Json observable_json(const ObservableStats& s) {
    Json j;
    j["mean"] = s.mean;
    j["sample_variance"] = s.sample_variance;
    j["std_error"] = s.std_error;
    j["confidence_radius"] = s.confidence_radius;
    return j;
}

struct CommonOpts {
    std::string input_path;
    std::string gen_spec;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    bool json = false;
    std::string out_path;
    std::optional<std::uint64_t> budget_flag;
    std::vector<std::string> warnings;

    CountBudget budget() const {
        CountBudget b;
        if (budget_flag) {
            b.node_limit = *budget_flag;
        } else if (const char* env = std::getenv("ISET_BUDGET")) {
            b.node_limit = parse_u64(env, "ISET_BUDGET");
        }
        return b;
    }

    Graph load(Json& config) {
        const bool has_file = !input_path.empty();
        const bool has_gen = !gen_spec.empty();
        if (has_file == has_gen)
            throw InputError("exactly one graph source required: an input file or --gen SPEC");
        if (has_file) {
            config["input"] = input_path;
            ParsedGraph parsed = load_edge_list(input_path);
            warnings.insert(warnings.end(), parsed.warnings.begin(), parsed.warnings.end());
            return parsed.graph;
        }
        config["generator"] = gen_spec;
        return build_from_spec(gen_spec, seed);
    }
};

void add_source_options(CLI::App* sub, CommonOpts& opts) {
    sub->add_option("input", opts.input_path, "edge-list file");
    sub->add_option("--gen", opts.gen_spec, "generator spec name:key=val,...");
    sub->add_option("--seed", opts.seed, "rng seed (echoed in the report)");
    sub->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
    sub->add_flag("--json", opts.json, "emit the report as JSON");
}

void emit(const Json& report, const CommonOpts& opts, std::ostream& out) {
    const std::string payload = opts.json ? report.dump(2) + "\n" : render_text(report);
    if (!opts.out_path.empty()) {
        std::ofstream file(opts.out_path);
        if (!file) throw InputError("cannot open output file: " + opts.out_path);
        file << payload;
    } else {
        out << payload;
    }
}

Json report_skeleton(const std::string& command) {
    Json report;
    report["artifact"] = Json{{"name", kArtifactName}, {"version", kArtifactVersion}};
    report["config"] = Json{{"command", command}};
    return report;
}

void finish(Json& report, const CommonOpts& opts, Clock::time_point start, std::ostream& out) {
    if (!opts.warnings.empty()) report["warnings"] = opts.warnings;
    Json timing;
    timing["workers"] = opts.workers;
    timing["wall_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    report["timing"] = std::move(timing);
    emit(report, opts, out);
}

int cmd_gen(CommonOpts& opts, std::ostream& out) {
    const auto start = Clock::now();
    if (opts.gen_spec.empty()) throw InputError("gen: missing generator spec");
    if (opts.out_path.empty()) throw InputError("gen: --out FILE is required");
    Json report = report_skeleton("gen");
    report["config"]["generator"] = opts.gen_spec;
    report["config"]["seed"] = opts.seed;
    report["config"]["out"] = opts.out_path;

    const Graph g = build_from_spec(opts.gen_spec, opts.seed);
    save_edge_list(g, opts.out_path);
    report["graph_stats"] = graph_stats_json(g);
    report["result"] = Json{{"written", opts.out_path}};

    // the graph went to --out, so the report itself goes to stdout
    const std::string saved_out = std::exchange(opts.out_path, std::string{});
    finish(report, opts, start, out);
    opts.out_path = saved_out;
    return kExitOk;
}

int cmd_count(CommonOpts& opts, bool with_profile, std::ostream& out) {
    const auto start = Clock::now();
    Json report = report_skeleton("count");
    Json config = report["config"];
    const Graph g = opts.load(config);
    config["seed"] = opts.seed;
    config["budget"] = opts.budget().node_limit;
    config["profile"] = with_profile;
    report["config"] = config;
    report["graph_stats"] = graph_stats_json(g);

    const BigCount count = count_independent_sets(g, opts.budget(), opts.workers);
    Json result;
    result["independent_sets"] = count.str();
    result["log2"] = count.log2_view();
    result["alpha"] = independence_number(g, opts.budget());
    if (with_profile) {
        const SizeProfile profile = size_profile(g, opts.budget());
        Json coeffs = Json::array();
        for (const BigInt& c : profile.coefficients) coeffs.push_back(c.str());
        result["profile"] = std::move(coeffs);
    }
    report["result"] = std::move(result);
    finish(report, opts, start, out);
    return kExitOk;
}

int cmd_aks(CommonOpts& opts, const AksParams& params, std::ostream& out) {
    const auto start = Clock::now();
    Json report = report_skeleton("aks");
    Json config = report["config"];
    const Graph g = opts.load(config);
    AksParams run_params = params;
    run_params.seed = opts.seed;

    const AksOutcome outcome = run_aks(g, run_params);
    config["seed"] = opts.seed;
    config["k"] = outcome.resolved_k;
    config["R"] = outcome.resolved_iteration_cap;
    config["c10"] = run_params.c10;
    config["nu_floor"] = std::isfinite(outcome.resolved_nu_floor)
                             ? Json(outcome.resolved_nu_floor)
                             : Json("-inf");
    config["low_degree_factor"] = run_params.low_degree_factor;
    config["edge_cap_factor"] = run_params.edge_cap_factor;
    config["max_attempts"] = run_params.max_attempts;
    config["strict_hypotheses"] = run_params.strict_hypotheses;
    report["config"] = config;
    report["graph_stats"] = graph_stats_json(g);
    opts.warnings.insert(opts.warnings.end(), outcome.warnings.begin(), outcome.warnings.end());

    Json result;
    result["path"] = outcome.path == AksPath::SparseUnion ? "sparse-union" : "turan-fallback";
    result["size"] = outcome.independent_set.size();
    result["independent_set"] = outcome.independent_set.members();
    result["verified_independent"] = is_independent(g, outcome.independent_set);
    result["completed_iterations"] = outcome.completed_iterations;
    report["result"] = std::move(result);

    Json trace = Json::array();
    for (const IterationRecord& rec : outcome.trace) {
        Json row;
        row["index"] = rec.index;
        row["n_i"] = rec.n_i;
        row["t_i"] = to_double(rec.t_i);
        row["t_i_exact"] = rational_str(rec.t_i);
        row["nu_i"] = rec.nu_i ? Json(*rec.nu_i) : Json(nullptr);
        row["attempts"] = rec.attempts;
        row["accepted"] = rec.accepted;
        row["sample_edges"] = rec.sample_edges;
        row["isolated_count"] = rec.isolated_count;
        row["sampling_exhausted"] = rec.sampling_exhausted;
        trace.push_back(std::move(row));
    }
    report["trace"] = std::move(trace);
    finish(report, opts, start, out);
    return kExitOk;
}

int cmd_verify_lemma(CommonOpts& opts, std::uint64_t k, std::size_t trials, double sigma,
                     double c10, std::ostream& out) {
    const auto start = Clock::now();
    Json report = report_skeleton("verify-lemma");
    Json config = report["config"];
    const Graph g = opts.load(config);
    config["seed"] = opts.seed;
    config["k"] = k;
    config["trials"] = trials;
    config["sigma"] = sigma;
    config["c10"] = c10;
    report["config"] = config;
    report["graph_stats"] = graph_stats_json(g);

    const LemmaReport lemma =
        check_lemma_bounds(g, k, trials, opts.seed, sigma, c10, opts.workers);
    Json result;
    result["pool_size"] = lemma.pool_size;
    result["pool_expected_sample_edges"] = rational_str(lemma.pool_expected_sample_edges);
    result["pool_expected_sample_edges_value"] = to_double(lemma.pool_expected_sample_edges);
    Json stats;
    stats["trials"] = lemma.stats.trials;
    stats["surviving_vertices"] = observable_json(lemma.stats.surviving_vertices);
    stats["surviving_edges"] = observable_json(lemma.stats.surviving_edges);
    stats["sample_edges"] = observable_json(lemma.stats.sample_edges);
    result["stats"] = std::move(stats);
    report["result"] = std::move(result);

    Json verdicts = Json::array();
    for (const ClaimRecord& claim : lemma.claims) {
        Json row;
        row["claim"] = claim.claim;
        row["bound"] = claim.bound ? Json(*claim.bound) : Json(nullptr);
        row["estimate"] = claim.estimate ? Json(*claim.estimate) : Json(nullptr);
        row["margin_sigma"] = claim.margin_sigma ? Json(*claim.margin_sigma) : Json(nullptr);
        row["verdict"] = verdict_name(claim.verdict);
        row["note"] = claim.note;
        verdicts.push_back(std::move(row));
    }
    report["verdicts"] = std::move(verdicts);
    report["overall"] = lemma.any_violated() ? "violated" : "consistent";
    finish(report, opts, start, out);
    return lemma.any_violated() ? kExitInternal : kExitOk;
}

int cmd_bounds(CommonOpts& opts, bool with_exact, std::optional<std::uint64_t> formula_n,
               std::optional<double> formula_t, std::ostream& out) {
    const auto start = Clock::now();
    Json report = report_skeleton("bounds");
    Json config = report["config"];

    BoundsReport bounds;
    std::optional<Graph> g;
    if (formula_n || formula_t) {
        if (!formula_n || !formula_t)
            throw InputError("formula mode needs both --n and --t");
        if (!opts.input_path.empty() || !opts.gen_spec.empty())
            throw InputError("formula mode excludes a graph source");
        config["formula_n"] = *formula_n;
        config["formula_t"] = *formula_t;
        report["config"] = config;
        bounds = evaluate_bound_formulas(*formula_n, *formula_t);
    } else {
        g = opts.load(config);
        config["seed"] = opts.seed;
        config["exact"] = with_exact;
        config["budget"] = opts.budget().node_limit;
        report["config"] = config;
        report["graph_stats"] = graph_stats_json(*g);
        bounds = evaluate_bounds(*g, with_exact, opts.budget(), opts.workers);
    }

    Json result;
    result["n"] = bounds.n;
    result["t"] = bounds.t;
    result["turan_subset_log2"] = bounds.turan_subset_log2;
    if (bounds.prop_log2) result["prop_log2"] = *bounds.prop_log2;
    if (bounds.main_log2) result["main_log2"] = *bounds.main_log2;
    if (g) {
        result["neighborhood_log2"] = bounds.neighborhood_log2;
        if (bounds.combined_log2) result["combined_log2"] = *bounds.combined_log2;
    }
    if (bounds.alpha) result["alpha"] = *bounds.alpha;
    if (bounds.upper_sum_log2) result["upper_sum_log2"] = *bounds.upper_sum_log2;
    if (bounds.exact_count) result["exact_count"] = *bounds.exact_count;
    if (bounds.exact_log2) result["exact_log2"] = *bounds.exact_log2;
    Json hyp;
    if (g) hyp["triangle_free"] = bounds.hypotheses.triangle_free;
    hyp["log_range"] = bounds.hypotheses.log_range;
    hyp["prop_range"] = bounds.hypotheses.prop_range;
    if (bounds.hypotheses.alpha_quarter) hyp["alpha_quarter"] = *bounds.hypotheses.alpha_quarter;
    result["hypotheses"] = std::move(hyp);
    if (bounds.budget_exhausted) result["budget_exhausted"] = true;
    report["result"] = std::move(result);

    bool sandwich_ok = true;
    if (g && with_exact && !bounds.budget_exhausted) {
        const SandwichVerdict verdict = verify_sandwich(*g, opts.budget());
        Json v;
        v["count_ge_pow_alpha"] = verdict.count_ge_pow_alpha;
        v["alpha_ge_turan"] = verdict.alpha_ge_turan;
        v["count_le_binom_sum"] = verdict.count_le_binom_sum;
        v["turan_floor"] = verdict.turan_floor.str();
        v["all"] = verdict.all();
        report["verdicts"] = std::move(v);
        sandwich_ok = verdict.all();
    }
    finish(report, opts, start, out);
    if (bounds.budget_exhausted) return kExitBudget;
    return sandwich_ok ? kExitOk : kExitInternal;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"independent-set counting and sampling experiments"};
    app.require_subcommand(1);

    CommonOpts gen_opts;
    auto* gen = app.add_subcommand("gen", "generate a graph and write the edge list");
    gen->add_option("spec", gen_opts.gen_spec, "generator spec name:key=val,...")->required();
    gen->add_option("--seed", gen_opts.seed, "rng seed");
    gen->add_option("--out", gen_opts.out_path, "edge-list output file")->required();
    gen->add_flag("--json", gen_opts.json, "emit the report as JSON");

    CommonOpts count_opts;
    bool count_profile = false;
    auto* count = app.add_subcommand("count", "exact independent-set count");
    add_source_options(count, count_opts);
    count->add_flag("--profile", count_profile, "include the size profile");
    count->add_option("--budget", count_opts.budget_flag, "recursion-node budget");
    count->add_option("--workers", count_opts.workers, "parallel workers");

    CommonOpts aks_opts;
    AksParams aks_params;
    std::uint64_t aks_k = 0, aks_cap = 0;
    double aks_nu_floor = 0.0;
    auto* aks = app.add_subcommand("aks", "run the sampling algorithm");
    add_source_options(aks, aks_opts);
    auto* aks_k_opt = aks->add_option("--k", aks_k, "sample size override");
    auto* aks_cap_opt = aks->add_option("--R", aks_cap, "iteration cap override");
    aks->add_option("--c10", aks_params.c10, "ratio-condition constant");
    auto* aks_nu_opt = aks->add_option("--nu-floor", aks_nu_floor, "fallback threshold override");
    aks->add_option("--low-degree-factor", aks_params.low_degree_factor, "pool degree cap factor");
    aks->add_option("--edge-cap-factor", aks_params.edge_cap_factor, "sample edge cap factor");
    aks->add_option("--max-attempts", aks_params.max_attempts, "rejection-sampling attempts");
    aks->add_flag("--strict-hypotheses", aks_params.strict_hypotheses,
                  "treat hypothesis warnings as errors");

    CommonOpts lemma_opts;
    std::uint64_t lemma_k = 0;
    std::size_t lemma_trials = 100000;
    double lemma_sigma = 4.0, lemma_c10 = 1.0;
    auto* lemma = app.add_subcommand("verify-lemma", "Monte-Carlo lemma statistics");
    add_source_options(lemma, lemma_opts);
    lemma->add_option("--k", lemma_k, "sample size")->required();
    lemma->add_option("--trials", lemma_trials, "Monte-Carlo trials");
    lemma->add_option("--sigma", lemma_sigma, "verdict tolerance in std errors");
    lemma->add_option("--c10", lemma_c10, "ratio-claim constant");
    lemma->add_option("--workers", lemma_opts.workers, "parallel workers");

    CommonOpts bounds_opts;
    bool bounds_exact = false;
    std::optional<std::uint64_t> formula_n;
    std::optional<double> formula_t;
    auto* bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    add_source_options(bounds, bounds_opts);
    bounds->add_flag("--exact", bounds_exact, "compute the exact count and sandwich check");
    bounds->add_option("--budget", bounds_opts.budget_flag, "recursion-node budget");
    bounds->add_option("--workers", bounds_opts.workers, "parallel workers");
    bounds->add_option("--n", formula_n, "formula-only mode: vertex count");
    bounds->add_option("--t", formula_t, "formula-only mode: average degree");

    std::vector<const char*> argv;
    argv.push_back("iset");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_opts, out);
        if (count->parsed()) return cmd_count(count_opts, count_profile, out);
        if (aks->parsed()) {
            if (aks_k_opt->count() > 0) aks_params.k = aks_k;
            if (aks_cap_opt->count() > 0) aks_params.iteration_cap = aks_cap;
            if (aks_nu_opt->count() > 0) aks_params.nu_floor = aks_nu_floor;
            return cmd_aks(aks_opts, aks_params, out);
        }
        if (lemma->parsed())
            return cmd_verify_lemma(lemma_opts, lemma_k, lemma_trials, lemma_sigma, lemma_c10, out);
        if (bounds->parsed())
            return cmd_bounds(bounds_opts, bounds_exact, formula_n, formula_t, out);
        err << "error: no subcommand\n";
        return kExitParse;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const DegenerateInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace iset::cli
