#include "csbm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "csbm/analysis.hpp"

namespace csbm {

std::string to_string(PipelineKind kind) {
    switch (kind) {
        case PipelineKind::MatchExhaustive: return "match-exhaustive";
        case PipelineKind::MatchLocal: return "match-local";
        case PipelineKind::RecoverSingle: return "recover-single";
        case PipelineKind::RecoverPair: return "recover-pair";
        case PipelineKind::RecoverK: return "recover-k";
        case PipelineKind::RecoverTwoStage: return "recover-two-stage";
        case PipelineKind::IntersectionConnectivity: return "intersection-connectivity";
        case PipelineKind::PgfValidate: return "pgf-validate";
    }
    return "?";
}

PipelineKind pipeline_from_string(const std::string& s) {
    if (s == "match-exhaustive") return PipelineKind::MatchExhaustive;
    if (s == "match-local") return PipelineKind::MatchLocal;
    if (s == "recover-single") return PipelineKind::RecoverSingle;
    if (s == "recover-pair") return PipelineKind::RecoverPair;
    if (s == "recover-k") return PipelineKind::RecoverK;
    if (s == "recover-two-stage") return PipelineKind::RecoverTwoStage;
    if (s == "intersection-connectivity") return PipelineKind::IntersectionConnectivity;
    if (s == "pgf-validate") return PipelineKind::PgfValidate;
    throw std::invalid_argument("unknown pipeline: " + s);
}

namespace {

const std::vector<std::string> kAxisNames = {"alpha", "beta", "s", "n", "k"};

void apply_axis_value(ModelParams& params, const std::string& name, double value) {
    if (name == "alpha") params.alpha = value;
    else if (name == "beta") params.beta = value;
    else if (name == "s") params.s = value;
    else if (name == "n") params.n = static_cast<int>(std::llround(value));
    else params.k_graphs = static_cast<int>(std::llround(value));
}

ModelParams params_at(const ExperimentConfig& config, int point_index) {
    ModelParams raw = config.base;
    int rem = point_index;
    for (std::size_t a = config.axes.size(); a-- > 0;) {
        const SweepAxis& axis = config.axes[a];
        const int count = static_cast<int>(axis.values.size());
        apply_axis_value(raw, axis.name, axis.values[static_cast<std::size_t>(rem % count)]);
        rem /= count;
    }
    // revalidate through the checking constructor
    return ModelParams(raw.n, raw.alpha, raw.beta, raw.s, raw.k_graphs, raw.scaling);
}

std::vector<double> coords_at(const ExperimentConfig& config, int point_index) {
    std::vector<double> coords(config.axes.size(), 0.0);
    int rem = point_index;
    for (std::size_t a = config.axes.size(); a-- > 0;) {
        const SweepAxis& axis = config.axes[a];
        const int count = static_cast<int>(axis.values.size());
        coords[a] = axis.values[static_cast<std::size_t>(rem % count)];
        rem /= count;
    }
    return coords;
}

}  // namespace

int point_count(const ExperimentConfig& config) {
    int total = 1;
    for (const SweepAxis& axis : config.axes) total *= static_cast<int>(axis.values.size());
    return total;
}

ModelParams point_params(const ExperimentConfig& config, int point_index) {
    if (point_index < 0 || point_index >= point_count(config))
        throw std::out_of_range("point_params: point index out of range");
    return params_at(config, point_index);
}

void validate_config(const ExperimentConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (config.mc_samples < 2) throw std::invalid_argument("config: mc_samples must be >= 2");
    if (config.threads < 0) throw std::invalid_argument("config: threads must be >= 0");
    for (std::size_t a = 0; a < config.axes.size(); ++a) {
        const SweepAxis& axis = config.axes[a];
        if (std::find(kAxisNames.begin(), kAxisNames.end(), axis.name) == kAxisNames.end())
            throw std::invalid_argument("config: unknown axis " + axis.name);
        if (axis.values.empty())
            throw std::invalid_argument("config: axis " + axis.name + " has no values");
        for (std::size_t b = 0; b < a; ++b)
            if (config.axes[b].name == axis.name)
                throw std::invalid_argument("config: duplicate axis " + axis.name);
    }
    // every grid point must define a valid model
    const int points = point_count(config);
    for (int p = 0; p < points; ++p) params_at(config, p);
}

namespace {

void run_match_trial(const CorrelatedFamily& family, const MatcherChoice& matcher,
                     const RandomStream& rng, TrialRecord& rec) {
    RandomStream match_rng = rng.split(stream_tag::matcher);
    const std::vector<Permutation> pi_hat = estimate_permutations(family, matcher, match_rng);
    bool all = true;
    for (std::size_t i = 0; i < pi_hat.size(); ++i) all = all && (pi_hat[i] == family.pi_star[i]);
    rec.matched = all;
    rec.success = all;
}

void run_trial(PipelineKind pipeline, const ModelParams& params, const MatcherChoice& matcher,
               std::int64_t mc_samples, RandomStream& rng, TrialRecord& rec) {
    switch (pipeline) {
        case PipelineKind::MatchExhaustive:
        case PipelineKind::MatchLocal: {
            MatcherChoice choice = matcher;
            choice.kind = pipeline == PipelineKind::MatchExhaustive ? MatcherKind::Exhaustive
                                                                    : MatcherKind::LocalSearch;
            const CorrelatedFamily family = generate_family(params, rng);
            run_match_trial(family, choice, rng, rec);
            return;
        }
        case PipelineKind::RecoverSingle: {
            const CorrelatedFamily family = generate_family(params, rng);
            RandomStream spectral_rng = rng.split(stream_tag::spectral);
            const SpectralRecovery sr = recover_single(family.g1, params, spectral_rng);
            rec.converged = sr.converged;
            rec.overlap = overlap(sr.sigma_hat, family.labels);
            rec.success = rec.overlap == 1.0;
            return;
        }
        case PipelineKind::RecoverPair:
        case PipelineKind::RecoverK: {
            const CorrelatedFamily family = generate_family(params, rng);
            const RecoveryResult rr = recover_k(family, matcher, rng);
            rec.matched = rr.matched;
            rec.converged = rr.converged;
            rec.overlap = rr.overlap;
            rec.success = rr.exact;
            return;
        }
        case PipelineKind::RecoverTwoStage: {
            const CorrelatedFamily family = generate_family(params, rng);
            const RecoveryResult rr = recover_two_stage(family, matcher, rng);
            rec.matched = rr.matched;
            rec.converged = rr.converged;
            rec.degenerate = rr.degenerate;
            rec.c_size = rr.c_size;
            rec.overlap = rr.overlap;
            rec.success = rr.exact;
            return;
        }
        case PipelineKind::IntersectionConnectivity: {
            const CorrelatedFamily family = generate_family(params, rng);
            const Graph meet = intersection_graph(family.g1, family.g_prime[0]);
            const ConnectivityReport report = connectivity_check(meet);
            rec.connected = report.connected;
            rec.components = report.components;
            rec.t_star_size = static_cast<std::int64_t>(meet.isolated_vertices().size());
            rec.success = report.connected;
            return;
        }
        case PipelineKind::PgfValidate: {
            PgfParams pgf;
            const int length = 2 + static_cast<int>(rng.below(5));
            pgf.lambda_pattern.resize(static_cast<std::size_t>(length));
            for (int& lam : pgf.lambda_pattern) lam = rng.bernoulli(0.5) ? 1 : -1;
            const double alpha = 0.01 + 0.49 * rng.real01();
            const double beta = 0.01 + (alpha - 0.01) * rng.real01();
            const double s = 0.1 + 0.8 * rng.real01();
            pgf.law = edge_joint_law(
                ModelParams(8, alpha, beta, s, 2, Scaling::RawProbability));
            pgf.theta = 0.3 + 1.2 * rng.real01();
            pgf.omega = 1.0 + 2.0 * rng.real01();
            pgf.zeta = 1.0 + 2.0 * rng.real01();

            rec.pgf_value = pgf_cycle(pgf);
            const PgfMonteCarlo mc = pgf_cycle_monte_carlo(pgf, mc_samples, rng);
            rec.mc_mean = mc.mean;
            rec.mc_se = mc.se;
            rec.success = std::abs(rec.pgf_value - mc.mean) <= 3.0 * mc.se;
            return;
        }
    }
    throw std::logic_error("run_trial: unhandled pipeline");
}

int resolve_threads(int configured) {
    if (const char* env = std::getenv("CSBM_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    if (configured >= 1) return configured;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

SweepResult run_sweep(const ExperimentConfig& config) {
    validate_config(config);

    const int points = point_count(config);
    const std::int64_t total = static_cast<std::int64_t>(points) * config.trials;

    SweepResult result;
    result.pipeline = config.pipeline;
    for (const SweepAxis& axis : config.axes) result.axis_names.push_back(axis.name);
    result.records.resize(static_cast<std::size_t>(total));

    std::atomic<std::int64_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::int64_t idx = cursor.fetch_add(1);
            if (idx >= total) return;
            const int point = static_cast<int>(idx / config.trials);
            const int trial = static_cast<int>(idx % config.trials);

            TrialRecord& rec = result.records[static_cast<std::size_t>(idx)];
            rec.point_index = point;
            rec.trial_index = trial;
            rec.coords = coords_at(config, point);

            const auto started = std::chrono::steady_clock::now();
            try {
                const ModelParams params = params_at(config, point);
                RandomStream rng = RandomStream::from_key(
                    config.master_seed, static_cast<std::uint64_t>(point),
                    static_cast<std::uint64_t>(trial));
                run_trial(config.pipeline, params, config.matcher, config.mc_samples, rng, rec);
            } catch (const std::exception& ex) {
                rec.success = false;
                rec.error = ex.what();
            }
            rec.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        }
    };

    const int threads = resolve_threads(config.threads);
    if (threads <= 1 || total <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return result;
}

void wilson_interval(int successes, int trials, double& lo, double& hi) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    const double z = 1.959963984540054;
    const double n = trials;
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    lo = std::max(0.0, center - half);
    hi = std::min(1.0, center + half);
}

std::vector<PointSummary> summarize(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw std::invalid_argument("summarize: no records");

    std::map<int, PointSummary> by_point;
    for (const TrialRecord& rec : records) {
        PointSummary& ps = by_point[rec.point_index];
        if (ps.trials == 0) {
            ps.point_index = rec.point_index;
            ps.coords = rec.coords;
        }
        ps.trials += 1;
        ps.successes += rec.success ? 1 : 0;
    }

    std::vector<PointSummary> out;
    out.reserve(by_point.size());
    for (auto& [point, ps] : by_point) {
        ps.rate = static_cast<double>(ps.successes) / ps.trials;
        wilson_interval(ps.successes, ps.trials, ps.wilson_lo, ps.wilson_hi);
        out.push_back(std::move(ps));
    }
    return out;
}

namespace {

constexpr const char* kSchemaTag = "csbm-records v1";
constexpr const char* kSummaryTag = "csbm-summary v1";

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string sanitize(const std::string& text) {
    std::string out = text;
    for (char& c : out)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return out;
}

std::string field_value(const TrialRecord& rec, const std::string& column) {
    if (column == "success") return rec.success ? "1" : "0";
    if (column == "matched") return rec.matched ? "1" : "0";
    if (column == "converged") return rec.converged ? "1" : "0";
    if (column == "degenerate") return rec.degenerate ? "1" : "0";
    if (column == "connected") return rec.connected ? "1" : "0";
    if (column == "overlap") return format_double(rec.overlap);
    if (column == "t_star_size") return std::to_string(rec.t_star_size);
    if (column == "components") return std::to_string(rec.components);
    if (column == "c_size") return std::to_string(rec.c_size);
    if (column == "pgf_value") return format_double(rec.pgf_value);
    if (column == "mc_mean") return format_double(rec.mc_mean);
    if (column == "mc_se") return format_double(rec.mc_se);
    if (column == "error") return sanitize(rec.error);
    throw std::logic_error("unknown record column: " + column);
}

void assign_field(TrialRecord& rec, const std::string& column, const std::string& value) {
    if (column == "success") rec.success = value == "1";
    else if (column == "matched") rec.matched = value == "1";
    else if (column == "converged") rec.converged = value == "1";
    else if (column == "degenerate") rec.degenerate = value == "1";
    else if (column == "connected") rec.connected = value == "1";
    else if (column == "overlap") rec.overlap = std::stod(value);
    else if (column == "t_star_size") rec.t_star_size = std::stoll(value);
    else if (column == "components") rec.components = std::stoll(value);
    else if (column == "c_size") rec.c_size = std::stoll(value);
    else if (column == "pgf_value") rec.pgf_value = std::stod(value);
    else if (column == "mc_mean") rec.mc_mean = std::stod(value);
    else if (column == "mc_se") rec.mc_se = std::stod(value);
    else if (column == "error") rec.error = value;
    else throw std::runtime_error("unknown record column: " + column);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

std::vector<std::string> csv_columns_for(PipelineKind kind) {
    switch (kind) {
        case PipelineKind::MatchExhaustive:
        case PipelineKind::MatchLocal:
            return {"success", "matched", "error"};
        case PipelineKind::RecoverSingle:
            return {"success", "overlap", "converged", "error"};
        case PipelineKind::RecoverPair:
        case PipelineKind::RecoverK:
            return {"success", "matched", "overlap", "converged", "error"};
        case PipelineKind::RecoverTwoStage:
            return {"success", "matched", "overlap", "converged", "degenerate", "c_size",
                    "error"};
        case PipelineKind::IntersectionConnectivity:
            return {"success", "connected", "components", "t_star_size", "error"};
        case PipelineKind::PgfValidate:
            return {"success", "pgf_value", "mc_mean", "mc_se", "error"};
    }
    throw std::logic_error("csv_columns_for: unhandled pipeline");
}

void write_records_csv(const SweepResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    const std::vector<std::string> columns = csv_columns_for(result.pipeline);
    out << "# " << kSchemaTag << " pipeline=" << to_string(result.pipeline) << '\n';
    out << "point,trial";
    for (const std::string& axis : result.axis_names) out << ',' << axis;
    for (const std::string& column : columns) out << ',' << column;
    out << '\n';

    for (const TrialRecord& rec : result.records) {
        out << rec.point_index << ',' << rec.trial_index;
        for (double c : rec.coords) out << ',' << format_double(c);
        for (const std::string& column : columns) out << ',' << field_value(rec, column);
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

SweepResult read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);

    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        throw std::runtime_error("records csv: missing schema comment");
    const std::string tag_and_pipeline = line.substr(2);
    const std::size_t marker = tag_and_pipeline.find(" pipeline=");
    if (marker == std::string::npos || tag_and_pipeline.substr(0, marker) != kSchemaTag)
        throw std::runtime_error("records csv: unsupported schema: " + line);

    SweepResult result;
    result.pipeline = pipeline_from_string(tag_and_pipeline.substr(marker + 10));

    if (!std::getline(in, line)) throw std::runtime_error("records csv: missing header");
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "point" || header[1] != "trial")
        throw std::runtime_error("records csv: malformed header");

    const std::vector<std::string> columns = csv_columns_for(result.pipeline);
    std::size_t axis_count = 0;
    while (2 + axis_count < header.size() &&
           std::find(columns.begin(), columns.end(), header[2 + axis_count]) == columns.end()) {
        result.axis_names.push_back(header[2 + axis_count]);
        ++axis_count;
    }
    if (header.size() != 2 + axis_count + columns.size())
        throw std::runtime_error("records csv: header does not match pipeline columns");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) throw std::runtime_error("records csv: ragged row");
        TrialRecord rec;
        rec.point_index = std::stoi(cells[0]);
        rec.trial_index = std::stoi(cells[1]);
        for (std::size_t a = 0; a < axis_count; ++a) rec.coords.push_back(std::stod(cells[2 + a]));
        for (std::size_t c = 0; c < columns.size(); ++c)
            assign_field(rec, columns[c], cells[2 + axis_count + c]);
        result.records.push_back(std::move(rec));
    }
    return result;
}

void write_summary_csv(const SweepResult& result, const std::vector<PointSummary>& summaries,
                       const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    out << "# " << kSummaryTag << " pipeline=" << to_string(result.pipeline) << '\n';
    out << "point";
    for (const std::string& axis : result.axis_names) out << ',' << axis;
    out << ",trials,successes,rate,wilson_lo,wilson_hi\n";
    for (const PointSummary& ps : summaries) {
        out << ps.point_index;
        for (double c : ps.coords) out << ',' << format_double(c);
        out << ',' << ps.trials << ',' << ps.successes << ',' << format_double(ps.rate) << ','
            << format_double(ps.wilson_lo) << ',' << format_double(ps.wilson_hi) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace csbm
