#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csbm/community.hpp"
#include "csbm/model.hpp"

namespace csbm {

enum class PipelineKind {
    MatchExhaustive,
    MatchLocal,
    RecoverSingle,
    RecoverPair,
    RecoverK,
    RecoverTwoStage,
    IntersectionConnectivity,
    PgfValidate,
};

std::string to_string(PipelineKind kind);
PipelineKind pipeline_from_string(const std::string& s);

// One swept parameter: name in {alpha, beta, s, n, k} and the values it takes.
// n and k entries are rounded to integers when applied.
struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

// A sweep evaluates the cartesian product of the axes (last axis fastest) for
// a fixed pipeline, running `trials` trials per point. Every trial draws its
// randomness from a substream keyed by (master_seed, point index, trial
// index), so results do not depend on scheduling. threads = 0 picks the
// hardware count; the CSBM_THREADS environment variable overrides either way.
struct ExperimentConfig {
    PipelineKind pipeline = PipelineKind::RecoverPair;
    ModelParams base;
    std::vector<SweepAxis> axes;
    int trials = 1;
    std::uint64_t master_seed = 0;
    MatcherChoice matcher;
    std::int64_t mc_samples = 100000;  // pgf-validate sample count
    int threads = 0;
};

// Throws on invalid axes, trials < 1, or any grid point whose parameters do
// not form a valid model.
void validate_config(const ExperimentConfig& config);

int point_count(const ExperimentConfig& config);

// Parameters at one grid point: base with each axis value applied.
ModelParams point_params(const ExperimentConfig& config, int point_index);

// Outcome of a single trial. Which fields are meaningful depends on the
// pipeline; the CSV writer emits the per-pipeline subset. wall_ms is kept for
// interactive inspection only and never written to CSV, so reruns at other
// thread counts stay byte-identical.
struct TrialRecord {
    int point_index = 0;
    int trial_index = 0;
    std::vector<double> coords;  // axis values at this point, axis order
    bool success = false;
    bool matched = false;
    bool converged = true;
    bool degenerate = false;
    bool connected = false;
    double overlap = 0.0;
    std::int64_t t_star_size = -1;
    std::int64_t components = -1;
    std::int64_t c_size = -1;
    double pgf_value = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
    std::string error;
    double wall_ms = 0.0;
};

struct SweepResult {
    PipelineKind pipeline = PipelineKind::RecoverPair;
    std::vector<std::string> axis_names;
    std::vector<TrialRecord> records;  // ordered by (point, trial)
};

// Runs every (point, trial) cell across a thread pool. Per-trial exceptions
// are captured in the record's error field; the sweep itself never aborts.
SweepResult run_sweep(const ExperimentConfig& config);

// Success rate per point with a Wilson 95% score interval.
struct PointSummary {
    int point_index = 0;
    std::vector<double> coords;
    int trials = 0;
    int successes = 0;
    double rate = 0.0;
    double wilson_lo = 0.0;
    double wilson_hi = 0.0;
};

std::vector<PointSummary> summarize(const std::vector<TrialRecord>& records);

// Wilson score interval for k successes out of n at 95% confidence,
// endpoints clamped to [0,1].
void wilson_interval(int successes, int trials, double& lo, double& hi);

// Per-pipeline record columns, in emission order, excluding point/trial and
// the axis columns that precede them.
std::vector<std::string> csv_columns_for(PipelineKind kind);

// Records CSV: '#' schema comment, header, one row per record in (point,
// trial) order.
void write_records_csv(const SweepResult& result, const std::string& path);

// Reads back a records CSV written by write_records_csv.
SweepResult read_records_csv(const std::string& path);

// Summary CSV: point coordinates, trial and success counts, rate, interval.
void write_summary_csv(const SweepResult& result, const std::vector<PointSummary>& summaries,
                       const std::string& path);

}  // namespace csbm
