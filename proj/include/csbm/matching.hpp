#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "csbm/model.hpp"

namespace csbm {

// Number of unordered pairs that are edges in g1 and, after mapping both
// endpoints through pi, edges in g2.
std::int64_t agreement_score(const Graph& g1, const Graph& g2, const Permutation& pi);

// Agreement-score diagnostics of a candidate pi measured against the family's
// ground truth: x_stat = score(pi_star) - score(pi), and y_plus/y_minus count
// the mismatched same/cross-community pairs that still agree under the truth.
struct MatchScore {
    std::int64_t agreements = 0;
    std::int64_t x_stat = 0;
    std::int64_t y_plus = 0;
    std::int64_t y_minus = 0;
};

MatchScore score_stats(const CorrelatedFamily& family, const Permutation& pi);

// Argmax of agreement_score by full permutation scan; ties resolved to the
// lexicographically smallest mapping. stats, when supplied, reports the
// winning score and how many permutations attained it.
struct ExhaustiveStats {
    std::int64_t best_score = 0;
    std::int64_t tie_count = 0;  // number of argmax permutations
};

Permutation match_exhaustive(const Graph& g1, const Graph& g2, int limit = 9,
                             ExhaustiveStats* stats = nullptr);

// Transposition hill climbing with random restarts.
struct SearchConfig {
    int restarts = 20;              // random restarts beyond the base run
    std::int64_t max_moves = 0;     // candidate evaluations per run; 0 = 50*n^2
    std::uint64_t seed = 0;
    std::optional<std::vector<int>> init;  // base-run start; default degree-greedy
};

Permutation match_local_search(const Graph& g1, const Graph& g2, const SearchConfig& config);

// Pair-count statistics driving the label-aware posterior: mu_*_11 counts
// pairs that are edges in both graphs under tau, nu_* counts tau-images that
// are g2 edges, split by the pair's community class.
struct PosteriorStats {
    std::int64_t mu_plus_11 = 0;
    std::int64_t mu_minus_11 = 0;
    std::int64_t nu_plus = 0;
    std::int64_t nu_minus = 0;
    double log_posterior_unnormalized = 0.0;
};

PosteriorStats posterior_stats(const Graph& g1, const Graph& g2, const Labeling& labels,
                               const EdgeJointLaw& law, const Permutation& pi);

// Maximum-a-posteriori matching given the true labels: scans all
// permutations, maximizing
//   mu+11*log(p00 p11 / (p01 p10)) + mu-11*log(q00 q11 / (q01 q10))
//   + nu+*log(p01/p00) + nu-*log(q01/q00),
// with ties broken uniformly at random from rng. Laws with any zero cell are
// rejected (the log weights would be undefined).
Permutation map_match_with_labels(const Graph& g1, const Graph& g2, const Labeling& labels,
                                  const EdgeJointLaw& law, RandomStream& rng, int limit = 9);

// Vertices with no agreeing incident pair under pi: i such that
// g1(i,j)*g2(pi(i),pi(j)) = 0 for all j — the isolated vertices of the
// intersection of g1 with g2 pulled back through pi — split by community.
struct AnchorSets {
    std::vector<int> t_all;
    std::vector<int> t_plus;
    std::vector<int> t_minus;
};

AnchorSets anchor_sets(const Graph& g1, const Graph& g2, const Permutation& pi,
                       const Labeling& labels);

}  // namespace csbm
