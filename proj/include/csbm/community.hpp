#pragma once

#include "csbm/matching.hpp"
#include "csbm/model.hpp"

namespace csbm {

// Sign-invariant agreement fraction |sum_i sigma_hat_i * sigma_i| / n.
double overlap(const Labeling& sigma_hat, const Labeling& sigma);

// How the pair/K pipelines estimate the hidden permutations.
enum class MatcherKind {
    Exhaustive,
    LocalSearch,
    Map,
    TrueInjected,  // ablation: use the ground-truth permutations
};

struct MatcherChoice {
    MatcherKind kind = MatcherKind::Exhaustive;
    int exhaustive_limit = 9;
    SearchConfig search;  // used by LocalSearch (seed is overridden per call)
};

std::string to_string(MatcherKind kind);
MatcherKind matcher_kind_from_string(const std::string& s);

// Runs the configured matcher against every relabeled child, in child order.
// rng drives LocalSearch seeding and Map tie-breaking; Exhaustive and
// TrueInjected leave it untouched.
std::vector<Permutation> estimate_permutations(const CorrelatedFamily& family,
                                               const MatcherChoice& matcher, RandomStream& rng);

// Single-graph recovery: spectral bipartition plus two rounds of neighbor
// majority voting. params_hint supplies only the vote direction sign(alpha -
// beta); the spectral step is parameter-free. converged reports whether the
// power iteration met its tolerance within the iteration budget (the best
// iterate is returned either way).
struct SpectralRecovery {
    Labeling sigma_hat;
    bool converged = true;
};

SpectralRecovery recover_single(const Graph& g, const ModelParams& params_hint, RandomStream& rng);

// Outcome of a full family pipeline, measured against the family's labels.
struct RecoveryResult {
    Labeling sigma_hat;
    double overlap = 0.0;
    bool exact = false;          // overlap == 1
    bool matched = false;        // every estimated permutation equals its truth
    bool converged = true;       // spectral step convergence
    bool degenerate = false;     // two-stage only: correctly-matched set too small
    std::int64_t c_size = -1;    // two-stage only: |C|
};

// Match-then-recover pipeline: match g1 against the relabeled child, overlay
// through the estimated permutation, recover on the overlay. rng is split
// into fixed-tag substreams (stream_tag::matcher / stream_tag::spectral), so
// the spectral stage sees the same stream whether or not a matcher ran.
RecoveryResult recover_pair(const CorrelatedFamily& family, const MatcherChoice& matcher,
                            const RandomStream& rng);

// K-graph generalization: match g1 against every relabeled child, overlay all
// of them, recover. recover_pair is the K=2 case.
RecoveryResult recover_k(const CorrelatedFamily& family, const MatcherChoice& matcher,
                         const RandomStream& rng);

// Oracle-assisted two-stage diagnostic: estimate pi, keep the correctly
// matched vertices C = {i : pi_hat(i) = pi_star(i)} (requires ground truth),
// recover on the overlay restricted to C, then label the rest by neighbor
// majority vote. |C| < 3 is reported as degenerate.
RecoveryResult recover_two_stage(const CorrelatedFamily& family, const MatcherChoice& matcher,
                                 const RandomStream& rng);

}  // namespace csbm
