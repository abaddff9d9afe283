#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csbm/graph.hpp"
#include "csbm/perm.hpp"
#include "csbm/rng.hpp"

namespace csbm {

enum class Scaling {
    LogOverN,        // p = alpha*log(n)/n, q = beta*log(n)/n
    RawProbability,  // p = alpha, q = beta
};

std::string to_string(Scaling s);
Scaling scaling_from_string(const std::string& s);

// Parameters of one correlated-SBM instance law. Validation happens here,
// once; downstream operations assume a valid object.
struct ModelParams {
    int n = 2;
    double alpha = 0.0;
    double beta = 0.0;
    double s = 1.0;
    int k_graphs = 2;
    Scaling scaling = Scaling::LogOverN;

    ModelParams() = default;
    ModelParams(int n, double alpha, double beta, double s, int k_graphs, Scaling scaling);

    double intra_p() const;  // derived p, in [0,1] by construction
    double inter_q() const;  // derived q
};

// +/-1 community assignment per vertex.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<std::int8_t> sigma);

    int n() const { return static_cast<int>(sigma_.size()); }
    int sigma(int i) const { return sigma_[i]; }
    const std::vector<std::int8_t>& values() const { return sigma_; }

    std::vector<int> v_plus() const;
    std::vector<int> v_minus() const;
    std::int64_t plus_count() const;

    bool same_community(int i, int j) const { return sigma_[i] == sigma_[j]; }

    // Bit mask of V_plus in Graph row layout, for word-parallel pair tallies.
    std::vector<std::uint64_t> plus_mask(int words_per_row) const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<std::int8_t> sigma_;
};

std::vector<std::int8_t> read_labels_file(const std::string& path);
void write_labels_file(const Labeling& labels, const std::string& path);

// Joint law of (A_e, B'_e) for one vertex pair under the common-parent
// subsampling construction: both children keep a parent edge independently
// with probability s, so an intra pair is (1,1) with probability s^2*p,
// (1,0) or (0,1) with probability s(1-s)*p each, and (0,0) otherwise; the
// q-quadruple is the same with q in place of p.
struct EdgeJointLaw {
    double p00 = 1, p01 = 0, p10 = 0, p11 = 0;
    double q00 = 1, q01 = 0, q10 = 0, q11 = 0;

    std::array<double, 4> intra() const { return {p00, p01, p10, p11}; }  // index = 2a+b
    std::array<double, 4> inter() const { return {q00, q01, q10, q11}; }
};

EdgeJointLaw edge_joint_law(const ModelParams& params);

// One sampled correlated family: parent G, first child G1, unrelabeled
// children G2'..GK', secret permutations, and the relabeled copies Gk with
// adjacency Gk(pi*(i), pi*(j)) = Gk'(i, j).
struct CorrelatedFamily {
    ModelParams params;
    Labeling labels;
    Graph parent;
    Graph g1;
    std::vector<Graph> g_prime;       // K-1 entries, child k at index k-2
    std::vector<Graph> g_relabelled;  // K-1 entries
    std::vector<Permutation> pi_star; // K-1 entries
};

Labeling sample_labeling(const ModelParams& params, RandomStream& rng);
Graph sample_sbm(const ModelParams& params, const Labeling& labels, RandomStream& rng);

// Keeps each edge of parent independently with probability s.
Graph subsample(const Graph& parent, double s, RandomStream& rng);

// Full construction: labels, parent, K subsampled children, K-1 uniform
// permutations, relabeled copies. Consumes rng in that fixed order.
CorrelatedFamily generate_family(const ModelParams& params, RandomStream& rng);

// Vertex renaming: relabel moves vertex i to pi(i); unrelabel is its inverse
// view, unrelabel(g, pi)(i, j) = g(pi(i), pi(j)).
Graph relabel(const Graph& g, const Permutation& pi);
Graph unrelabel(const Graph& g, const Permutation& pi);

// Union of g1 with each other graph pulled back through its permutation:
// (i,j) is an edge iff it is in g1 or (pi_k(i), pi_k(j)) is in the k-th graph.
Graph overlay_by_permutations(const Graph& g1,
                              const std::vector<std::pair<const Graph*, const Permutation*>>& others);

// Inverse constructions used by the distributional-equivalence arguments:
// scatter each edge of a union-rate graph back onto children conditioned on
// "at least one child kept it".
//
// Pair version: per edge of h, membership in (first only, second only, both)
// with probabilities (s(1-s), s(1-s), s^2) / (1-(1-s)^2).
std::pair<Graph, Graph> split_union_pair(const Graph& h, double s, RandomStream& rng);

// K version: per edge of h, draw a nonzero membership pattern x in {0,1}^k
// with probability s^|x| (1-s)^(k-|x|) / (1-(1-s)^k); edge lands in output t
// iff x_t = 1.
std::vector<Graph> split_union_k(const Graph& h, double s, int k, RandomStream& rng);

// Probability of pattern x (given as a bitmask over k slots) under the
// split_union_k distribution. Pre: s in (0,1], x != 0.
double split_pattern_probability(double s, int k, unsigned x);

// 2x2 joint tallies of (a_e, b_e) over intra and inter pairs; intra[2a+b].
struct PairJointCounts {
    std::array<std::int64_t, 4> intra{0, 0, 0, 0};
    std::array<std::int64_t, 4> inter{0, 0, 0, 0};
};

PairJointCounts tally_pair_joint(const Graph& a, const Graph& b, const Labeling& labels);

// Family directory layout: labels.txt, parent.edges, g1.edges, and per child
// k = 2..K the files gk_prime.edges, gk.edges, pi_star_k.perm.
void export_family(const CorrelatedFamily& family, const std::string& dir);
CorrelatedFamily import_family(const std::string& dir, const ModelParams& params);

}  // namespace csbm
