#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "csbm/analysis.hpp"
#include "csbm/community.hpp"
#include "csbm/harness.hpp"
#include "csbm/matching.hpp"
#include "csbm/model.hpp"

#ifndef CSBM_BUILD_ID
#define CSBM_BUILD_ID "dev"
#endif

namespace {

using nlohmann::json;

std::string g_command_line;

json manifest_base(const std::string& subcommand) {
    json j;
    j["schema"] = "csbm-manifest v1";
    j["build"] = CSBM_BUILD_ID;
    j["command"] = g_command_line;
    j["subcommand"] = subcommand;
    return j;
}

void write_manifest(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

json params_json(const csbm::ModelParams& p) {
    return json{{"n", p.n},       {"alpha", p.alpha},           {"beta", p.beta},
                {"s", p.s},       {"k_graphs", p.k_graphs},     {"scaling", to_string(p.scaling)}};
}

struct ModelFlags {
    int n = 100;
    double alpha = 0.0;
    double beta = 0.0;
    double s = 1.0;
    int k = 2;
    std::string scaling = "log";

    csbm::ModelParams build() const {
        return csbm::ModelParams(n, alpha, beta, s, k, csbm::scaling_from_string(scaling));
    }
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags, bool need_n) {
    auto* n_opt = cmd->add_option("--n", flags.n, "Vertex count");
    if (need_n) n_opt->required();
    cmd->add_option("--alpha", flags.alpha, "Intra-community rate");
    cmd->add_option("--beta", flags.beta, "Inter-community rate");
    cmd->add_option("--s", flags.s, "Edge subsampling probability");
    cmd->add_option("--k", flags.k, "Number of correlated graphs");
    cmd->add_option("--scaling", flags.scaling, "Rate scaling: log (alpha log n / n) or raw")
        ->check(CLI::IsMember({"log", "raw"}));
}

struct MatcherFlags {
    std::string solver = "exhaustive";
    int limit = 9;
    int restarts = 20;
    std::int64_t max_moves = 0;

    csbm::MatcherChoice build() const {
        csbm::MatcherChoice choice;
        choice.kind = csbm::matcher_kind_from_string(solver);
        choice.exhaustive_limit = limit;
        choice.search.restarts = restarts;
        choice.search.max_moves = max_moves;
        return choice;
    }
};

void add_matcher_flags(CLI::App* cmd, MatcherFlags& flags, const std::vector<std::string>& kinds) {
    cmd->add_option("--solver", flags.solver, "Permutation solver")->check(CLI::IsMember(kinds));
    cmd->add_option("--limit", flags.limit, "Max n for exhaustive/map scans");
    cmd->add_option("--restarts", flags.restarts, "Local search random restarts");
    cmd->add_option("--max-moves", flags.max_moves,
                    "Local search move attempts per run (0 = 50 n^2)");
}

csbm::PhaseAxis parse_phase_axis(const std::string& spec) {
    // name:lo:hi:count
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 4)
        throw std::invalid_argument("axis spec must be name:lo:hi:count, got: " + spec);
    csbm::PhaseAxis axis;
    axis.name = parts[0];
    axis.lo = std::stod(parts[1]);
    axis.hi = std::stod(parts[2]);
    axis.count = std::stoi(parts[3]);
    return axis;
}

csbm::SweepAxis parse_sweep_axis(const std::string& spec) {
    // name=v1,v2,v3
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("axis spec must be name=v1,v2,..., got: " + spec);
    csbm::SweepAxis axis;
    axis.name = spec.substr(0, eq);
    std::stringstream ss(spec.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) axis.values.push_back(std::stod(item));
    if (axis.values.empty()) throw std::invalid_argument("axis has no values: " + spec);
    return axis;
}

std::string sweep_column_help() {
    std::string text = "Records CSV columns per pipeline (after point, trial, axes):\n";
    for (const char* name :
         {"match-exhaustive", "match-local", "recover-single", "recover-pair", "recover-k",
          "recover-two-stage", "intersection-connectivity", "pgf-validate"}) {
        text += "  ";
        text += name;
        text += ":";
        for (const std::string& col : csbm::csv_columns_for(csbm::pipeline_from_string(name))) {
            text += ' ';
            text += col;
        }
        text += '\n';
    }
    text += "Summary CSV: point, axes, trials, successes, rate, wilson_lo, wilson_hi\n";
    text += "CSBM_THREADS overrides --threads.";
    return text;
}

int run_generate(const ModelFlags& model, std::uint64_t seed, const std::string& out_dir) {
    const csbm::ModelParams params = model.build();
    csbm::RandomStream rng(seed);
    const csbm::CorrelatedFamily family = csbm::generate_family(params, rng);
    csbm::export_family(family, out_dir);

    json manifest = manifest_base("generate");
    manifest["seed"] = seed;
    manifest["params"] = params_json(params);
    manifest["outputs"] = json::array({out_dir});
    write_manifest(out_dir + "/manifest.json", manifest);

    std::cout << "family written to " << out_dir << " (n=" << params.n
              << ", children=" << params.k_graphs - 1 << ")\n";
    return 0;
}

int run_match(const std::string& g1_path, const std::string& g2_path,
              const std::string& truth_path, const std::string& labels_path,
              const MatcherFlags& matcher, const ModelFlags& model, std::uint64_t seed,
              const std::string& out_path) {
    const csbm::Graph g1 = csbm::read_edge_list_file(g1_path);
    const csbm::Graph g2 = csbm::read_edge_list_file(g2_path);

    csbm::RandomStream rng(seed);
    csbm::Permutation pi;
    if (matcher.solver == "exhaustive") {
        pi = csbm::match_exhaustive(g1, g2, matcher.limit);
    } else if (matcher.solver == "local") {
        csbm::SearchConfig cfg;
        cfg.restarts = matcher.restarts;
        cfg.max_moves = matcher.max_moves;
        cfg.seed = seed;
        pi = csbm::match_local_search(g1, g2, cfg);
    } else {
        if (labels_path.empty())
            throw std::invalid_argument("--solver map requires --labels");
        const csbm::Labeling labels(csbm::read_labels_file(labels_path));
        ModelFlags law_flags = model;
        law_flags.n = g1.n();
        const csbm::EdgeJointLaw law = csbm::edge_joint_law(law_flags.build());
        pi = csbm::map_match_with_labels(g1, g2, labels, law, rng, matcher.limit);
    }

    csbm::write_permutation_file(pi, out_path);

    json summary;
    summary["agreements"] = csbm::agreement_score(g1, g2, pi);
    int exit_code = 0;
    if (!truth_path.empty()) {
        const csbm::Permutation truth = csbm::read_permutation_file(truth_path);
        const bool recovered = pi == truth;
        summary["recovered"] = recovered;
        exit_code = recovered ? 0 : 1;
    }

    json manifest = manifest_base("match");
    manifest["seed"] = seed;
    manifest["solver"] = matcher.solver;
    manifest["inputs"] = json::array({g1_path, g2_path});
    manifest["outputs"] = json::array({out_path});
    write_manifest(out_path + ".manifest.json", manifest);

    std::cout << summary.dump() << '\n';
    return exit_code;
}

int run_recover(const std::string& family_dir, const ModelFlags& model,
                const std::string& pipeline, const MatcherFlags& matcher, std::uint64_t seed,
                const std::string& out_path) {
    const csbm::ModelParams params = model.build();
    csbm::RandomStream rng(seed);
    const csbm::CorrelatedFamily family = family_dir.empty()
                                              ? csbm::generate_family(params, rng)
                                              : csbm::import_family(family_dir, params);

    const auto started = std::chrono::steady_clock::now();
    csbm::RecoveryResult result;
    if (pipeline == "single") {
        csbm::RandomStream spectral_rng = rng.split(csbm::stream_tag::spectral);
        csbm::SpectralRecovery sr = csbm::recover_single(family.g1, params, spectral_rng);
        result.sigma_hat = std::move(sr.sigma_hat);
        result.converged = sr.converged;
        result.overlap = csbm::overlap(result.sigma_hat, family.labels);
        result.exact = result.overlap == 1.0;
    } else {
        const csbm::MatcherChoice choice = matcher.build();
        if (pipeline == "pair") result = csbm::recover_pair(family, choice, rng);
        else if (pipeline == "k") result = csbm::recover_k(family, choice, rng);
        else result = csbm::recover_two_stage(family, choice, rng);
    }
    const double runtime_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - started)
                                  .count();

    csbm::write_labels_file(result.sigma_hat, out_path);

    json summary;
    summary["pipeline"] = pipeline;
    summary["overlap"] = result.overlap;
    summary["exact"] = result.exact;
    summary["matched"] = result.matched;
    summary["runtime_ms"] = runtime_ms;
    if (pipeline == "two-stage") {
        summary["c_size"] = result.c_size;
        summary["degenerate"] = result.degenerate;
    }

    json manifest = manifest_base("recover");
    manifest["seed"] = seed;
    manifest["params"] = params_json(params);
    manifest["pipeline"] = pipeline;
    manifest["solver"] = matcher.solver;
    if (!family_dir.empty()) manifest["family"] = family_dir;
    manifest["outputs"] = json::array({out_path});
    write_manifest(out_path + ".manifest.json", manifest);

    std::cout << summary.dump() << '\n';
    return 0;
}

int run_phase(const std::string& x_spec, const std::string& y_spec, const ModelFlags& model,
              const std::string& out_path, const std::string& svg_path) {
    const csbm::PhaseAxis x = parse_phase_axis(x_spec);
    const csbm::PhaseAxis y = parse_phase_axis(y_spec);

    // assignment instead of the validating constructor: grids span rate
    // values that need not be realizable probabilities at any fixed n
    csbm::ModelParams base;
    base.n = model.n;
    base.alpha = model.alpha;
    base.beta = model.beta;
    base.s = model.s;
    base.k_graphs = model.k;
    base.scaling = csbm::scaling_from_string(model.scaling);

    const csbm::PhaseGrid grid = csbm::phase_grid(x, y, base);
    csbm::write_phase_csv(grid, out_path);
    if (!svg_path.empty()) csbm::write_phase_svg(grid, svg_path);

    json manifest = manifest_base("phase");
    manifest["x"] = x_spec;
    manifest["y"] = y_spec;
    manifest["fixed"] = params_json(base);
    json outputs = json::array({out_path});
    if (!svg_path.empty()) outputs.push_back(svg_path);
    manifest["outputs"] = outputs;
    write_manifest(out_path + ".manifest.json", manifest);

    std::cout << "phase grid " << x.count << "x" << y.count << " written to " << out_path << '\n';
    return 0;
}

int run_sweep_cmd(const std::string& pipeline, const ModelFlags& model,
                  const std::vector<std::string>& axis_specs, int trials, std::uint64_t seed,
                  const MatcherFlags& matcher, std::int64_t mc_samples, int threads,
                  const std::string& out_prefix) {
    csbm::ExperimentConfig config;
    config.pipeline = csbm::pipeline_from_string(pipeline);
    config.base = model.build();
    for (const std::string& spec : axis_specs) config.axes.push_back(parse_sweep_axis(spec));
    config.trials = trials;
    config.master_seed = seed;
    config.matcher = matcher.build();
    config.mc_samples = mc_samples;
    config.threads = threads;

    const csbm::SweepResult result = csbm::run_sweep(config);
    const std::vector<csbm::PointSummary> summaries = csbm::summarize(result.records);

    const std::string records_path = out_prefix + ".records.csv";
    const std::string summary_path = out_prefix + ".summary.csv";
    csbm::write_records_csv(result, records_path);
    csbm::write_summary_csv(result, summaries, summary_path);

    json manifest = manifest_base("sweep");
    manifest["seed"] = seed;
    manifest["pipeline"] = pipeline;
    manifest["params"] = params_json(config.base);
    manifest["trials"] = trials;
    manifest["mc_samples"] = mc_samples;
    manifest["threads"] = threads;
    manifest["solver"] = matcher.solver;
    json axes = json::array();
    for (const csbm::SweepAxis& axis : config.axes)
        axes.push_back(json{{"name", axis.name}, {"values", axis.values}});
    manifest["axes"] = axes;
    manifest["outputs"] = json::array({records_path, summary_path});
    write_manifest(out_prefix + ".manifest.json", manifest);

    for (const csbm::PointSummary& ps : summaries) {
        std::cout << "point " << ps.point_index;
        for (std::size_t a = 0; a < ps.coords.size(); ++a)
            std::cout << ' ' << result.axis_names[a] << '=' << ps.coords[a];
        std::printf("  rate=%.4f  [%.4f, %.4f]  (%d/%d)\n", ps.rate, ps.wilson_lo, ps.wilson_hi,
                    ps.successes, ps.trials);
    }
    return 0;
}

bool report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << ' ' << name;
    if (!detail.empty()) std::cout << " (" << detail << ')';
    std::cout << '\n';
    return pass;
}

bool check_joint_law(std::uint64_t seed) {
    const csbm::ModelParams params(300, 0.2, 0.05, 0.5, 2, csbm::Scaling::RawProbability);
    const csbm::EdgeJointLaw law = csbm::edge_joint_law(params);
    csbm::RandomStream rng(seed);

    csbm::PairJointCounts totals;
    for (int rep = 0; rep < 300; ++rep) {
        const csbm::CorrelatedFamily family = csbm::generate_family(params, rng);
        const csbm::PairJointCounts counts =
            csbm::tally_pair_joint(family.g1, family.g_prime[0], family.labels);
        for (int c = 0; c < 4; ++c) {
            totals.intra[c] += counts.intra[c];
            totals.inter[c] += counts.inter[c];
        }
    }

    double worst = 0.0;
    for (int side = 0; side < 2; ++side) {
        const auto& observed = side == 0 ? totals.intra : totals.inter;
        const auto expected = side == 0 ? law.intra() : law.inter();
        double total = 0.0;
        for (int c = 0; c < 4; ++c) total += static_cast<double>(observed[c]);
        for (int c = 0; c < 4; ++c) {
            const double p = expected[static_cast<std::size_t>(c)];
            const double se = std::sqrt(p * (1.0 - p) / total);
            const double z = std::abs(observed[static_cast<std::size_t>(c)] / total - p) /
                             (se > 0.0 ? se : 1.0);
            worst = std::max(worst, z);
        }
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "max |z| = %.2f", worst);
    return report("joint-law: empirical pair frequencies within 3 SE", worst <= 3.0, detail);
}

bool check_splitter(std::uint64_t seed) {
    bool all = true;

    const double r111 = csbm::split_pattern_probability(0.5, 3, 0b111);
    all &= report("splitter: P(all three keep) = 1/7 at s=0.5",
                  std::abs(r111 - 1.0 / 7.0) <= 1e-12, "");

    for (const auto& [s, k] : std::vector<std::pair<double, int>>{{0.3, 4}, {0.5, 3}, {0.9, 2}}) {
        double total = 0.0;
        for (unsigned x = 1; x < (1u << k); ++x) total += csbm::split_pattern_probability(s, k, x);
        char name[64];
        std::snprintf(name, sizeof name, "splitter: pattern masses sum to 1 (s=%.1f, k=%d)", s, k);
        all &= report(name, std::abs(total - 1.0) <= 1e-12, "");
    }

    const csbm::Graph h = csbm::Graph::complete(150);
    csbm::RandomStream rng(seed);
    const auto [a, b] = csbm::split_union_pair(h, 0.6, rng);
    std::int64_t n10 = 0, n01 = 0, n11 = 0;
    h.for_each_edge([&](int i, int j) {
        const bool in_a = a.has_edge(i, j);
        const bool in_b = b.has_edge(i, j);
        if (in_a && in_b) ++n11;
        else if (in_a) ++n10;
        else ++n01;
    });
    const double total = static_cast<double>(h.edge_count());
    const double denom = 1.0 - 0.4 * 0.4;
    const double r10 = 0.6 * 0.4 / denom;
    const double r11 = 0.36 / denom;
    double worst = 0.0;
    for (const auto& [count, p] :
         std::vector<std::pair<std::int64_t, double>>{{n10, r10}, {n01, r10}, {n11, r11}}) {
        const double se = std::sqrt(p * (1.0 - p) / total);
        worst = std::max(worst, std::abs(count / total - p) / se);
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "max |z| = %.2f", worst);
    all &= report("splitter: pair membership frequencies within 3 SE", worst <= 3.0, detail);
    return all;
}

bool check_pgf(std::uint64_t seed) {
    bool all = true;
    const csbm::EdgeJointLaw law =
        csbm::edge_joint_law(csbm::ModelParams(8, 0.01, 0.004, 0.6, 2, csbm::Scaling::RawProbability));

    csbm::PgfParams unit;
    unit.law = law;
    unit.lambda_pattern = {1, -1, 1, 1, -1};
    all &= report("pgf: unit-argument cycle value is 1",
                  std::abs(csbm::pgf_cycle(unit) - 1.0) <= 1e-12, "");

    csbm::PgfParams two;
    two.theta = 0.5;
    two.omega = 1.5;
    two.zeta = 1.5;
    two.law = law;
    two.lambda_pattern = {1, 1};
    const csbm::PgfTable table = csbm::pgf_advance(csbm::pgf_initial(two), two, 2);
    const double closed =
        law.p00 + law.p10 + law.p01 / two.theta + law.p11 * two.omega;
    all &= report("pgf: two-step recursion matches the closed form",
                  std::abs(table.at(1, 0, 0) - closed) <= 1e-12, "");

    csbm::PgfParams cyc = two;
    cyc.lambda_pattern = {1, 1, -1, -1};
    csbm::RandomStream rng(seed);
    const double value = csbm::pgf_cycle(cyc);
    const csbm::PgfMonteCarlo mc = csbm::pgf_cycle_monte_carlo(cyc, 1000000, rng);
    char detail[96];
    std::snprintf(detail, sizeof detail, "recursion %.6f vs simulation %.6f +- %.6f", value,
                  mc.mean, mc.se);
    all &= report("pgf: recursion within 3 SE of simulation",
                  std::abs(value - mc.mean) <= 3.0 * mc.se, detail);
    return all;
}

int run_validate(const std::string& check, std::uint64_t seed) {
    bool all = true;
    if (check == "all" || check == "joint-law") all &= check_joint_law(seed);
    if (check == "all" || check == "splitter") all &= check_splitter(seed);
    if (check == "all" || check == "pgf") all &= check_pgf(seed);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 0; i < argc; ++i) {
        if (i) g_command_line += ' ';
        g_command_line += argv[i];
    }

    CLI::App app{"Correlated SBM toolkit: generation, matching, recovery, phase analysis"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI config file (key = value, [subcommand] sections)");

    int exit_code = 0;

    // generate
    auto* gen = app.add_subcommand("generate", "Sample a correlated family and export it");
    ModelFlags gen_model;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    add_model_flags(gen, gen_model, true);
    gen->add_option("--seed", gen_seed, "Generation seed");
    gen->add_option("--out", gen_out, "Output directory")->required();
    gen->callback([&]() { exit_code = run_generate(gen_model, gen_seed, gen_out); });

    // match
    auto* match = app.add_subcommand("match", "Align two edge lists by permutation search");
    std::string match_g1, match_g2, match_truth, match_labels, match_out;
    MatcherFlags match_flags;
    ModelFlags match_model;
    std::uint64_t match_seed = 0;
    match->add_option("--g1", match_g1, "First edge-list file")->required();
    match->add_option("--g2", match_g2, "Second edge-list file")->required();
    match->add_option("--truth", match_truth, "Ground-truth permutation file (sets exit status)");
    match->add_option("--labels", match_labels, "Labels file, required by --solver map");
    add_matcher_flags(match, match_flags, {"exhaustive", "local", "map"});
    add_model_flags(match, match_model, false);
    match->add_option("--seed", match_seed, "Search / tie-break seed");
    match->add_option("--out", match_out, "Output permutation file")->required();
    match->callback([&]() {
        exit_code = run_match(match_g1, match_g2, match_truth, match_labels, match_flags,
                              match_model, match_seed, match_out);
    });

    // recover
    auto* rec = app.add_subcommand("recover", "Run a community recovery pipeline");
    std::string rec_family, rec_pipeline = "pair", rec_out;
    ModelFlags rec_model;
    MatcherFlags rec_flags;
    std::uint64_t rec_seed = 0;
    rec->add_option("--family", rec_family, "Family directory (default: generate from params)");
    add_model_flags(rec, rec_model, true);
    rec->add_option("--pipeline", rec_pipeline, "single, pair, k, or two-stage")
        ->check(CLI::IsMember({"single", "pair", "k", "two-stage"}));
    add_matcher_flags(rec, rec_flags, {"exhaustive", "local", "map", "oracle"});
    rec->add_option("--seed", rec_seed, "Generation and recovery seed");
    rec->add_option("--out", rec_out, "Output labels file")->required();
    rec->callback([&]() {
        exit_code = run_recover(rec_family, rec_model, rec_pipeline, rec_flags, rec_seed, rec_out);
    });

    // phase
    auto* phase = app.add_subcommand("phase", "Classify a 2D parameter grid into phase regions");
    std::string phase_x, phase_y, phase_out, phase_svg;
    ModelFlags phase_model;
    phase_model.s = 0.5;
    phase->add_option("--x", phase_x, "X axis as name:lo:hi:count over alpha/beta/s")->required();
    phase->add_option("--y", phase_y, "Y axis as name:lo:hi:count")->required();
    add_model_flags(phase, phase_model, false);
    phase->add_option("--out", phase_out, "Output CSV")->required();
    phase->add_option("--svg", phase_svg, "Optional SVG heat map");
    phase->callback(
        [&]() { exit_code = run_phase(phase_x, phase_y, phase_model, phase_out, phase_svg); });

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over a parameter grid");
    sweep->footer(sweep_column_help());
    std::string sweep_pipeline, sweep_out;
    ModelFlags sweep_model;
    MatcherFlags sweep_flags;
    std::vector<std::string> sweep_axes;
    int sweep_trials = 1;
    std::uint64_t sweep_seed = 0;
    std::int64_t sweep_mc = 100000;
    int sweep_threads = 0;
    sweep->add_option("--pipeline", sweep_pipeline, "Pipeline to run per trial")
        ->required()
        ->check(CLI::IsMember({"match-exhaustive", "match-local", "recover-single",
                               "recover-pair", "recover-k", "recover-two-stage",
                               "intersection-connectivity", "pgf-validate"}));
    add_model_flags(sweep, sweep_model, true);
    sweep->add_option("--axis", sweep_axes, "Swept axis as name=v1,v2,... (repeatable)");
    sweep->add_option("--trials", sweep_trials, "Trials per grid point");
    sweep->add_option("--seed", sweep_seed, "Master seed");
    add_matcher_flags(sweep, sweep_flags, {"exhaustive", "local", "map", "oracle"});
    sweep->add_option("--mc-samples", sweep_mc, "Samples per pgf-validate trial");
    sweep->add_option("--threads", sweep_threads, "Worker threads (0 = hardware)");
    sweep->add_option("--out", sweep_out, "Output path prefix")->required();
    sweep->callback([&]() {
        exit_code = run_sweep_cmd(sweep_pipeline, sweep_model, sweep_axes, sweep_trials,
                                  sweep_seed, sweep_flags, sweep_mc, sweep_threads, sweep_out);
    });

    // validate
    auto* val = app.add_subcommand("validate", "Self-checks of the sampling constructions");
    std::string val_check = "all";
    std::uint64_t val_seed = 1234;
    val->add_option("--check", val_check, "joint-law, splitter, pgf, or all")
        ->check(CLI::IsMember({"joint-law", "splitter", "pgf", "all"}));
    val->add_option("--seed", val_seed, "Simulation seed");
    val->callback([&]() { exit_code = run_validate(val_check, val_seed); });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return exit_code;
}
