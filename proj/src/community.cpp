#include "csbm/community.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace csbm {

double overlap(const Labeling& sigma_hat, const Labeling& sigma) {
    const int n = sigma.n();
    if (sigma_hat.n() != n) throw std::invalid_argument("overlap: size mismatch");
    std::int64_t sum = 0;
    for (int i = 0; i < n; ++i) sum += sigma_hat.sigma(i) * sigma.sigma(i);
    return std::abs(static_cast<double>(sum)) / n;
}

std::string to_string(MatcherKind kind) {
    switch (kind) {
        case MatcherKind::Exhaustive: return "exhaustive";
        case MatcherKind::LocalSearch: return "local";
        case MatcherKind::Map: return "map";
        case MatcherKind::TrueInjected: return "oracle";
    }
    return "?";
}

MatcherKind matcher_kind_from_string(const std::string& s) {
    if (s == "exhaustive") return MatcherKind::Exhaustive;
    if (s == "local") return MatcherKind::LocalSearch;
    if (s == "map") return MatcherKind::Map;
    if (s == "oracle" || s == "true") return MatcherKind::TrueInjected;
    throw std::invalid_argument("unknown matcher kind: " + s);
}

namespace {

// Compressed neighbor lists; repeated matvecs over bit rows would rescan
// empty words, the CSR form touches each edge once.
struct Csr {
    std::vector<int> offsets;
    std::vector<int> neighbors;

    explicit Csr(const Graph& g) {
        const int n = g.n();
        offsets.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + g.degree(i);
        neighbors.resize(offsets[n]);
        std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
        g.for_each_edge([&](int i, int j) {
            neighbors[cursor[i]++] = j;
            neighbors[cursor[j]++] = i;
        });
    }
};

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// Largest-magnitude eigenvector of the centered adjacency operator
// A - (2m/n^2) J restricted to the complement of the all-ones direction.
// Centering plus the projection deflate the trivial mean/degree direction, so
// the dominant remaining eigenvector is the bipartition direction whenever
// the model has one. Returns false if the direction did not stabilize to tol
// within max_iter iterations.
bool dominant_centered_eigenvector(const Csr& adj, int n, std::int64_t m, int max_iter,
                                   double tol, RandomStream& rng, std::vector<double>& x) {
    const double c = 2.0 * static_cast<double>(m) / (static_cast<double>(n) * n);
    x.resize(n);
    for (double& v : x) v = 2.0 * rng.real01() - 1.0;

    std::vector<double> y(n);
    auto project_and_normalize = [&](std::vector<double>& v) {
        double mean = 0.0;
        for (double t : v) mean += t;
        mean /= n;
        for (double& t : v) t -= mean;
        const double nn = norm(v);
        if (nn < 1e-300) return false;
        for (double& t : v) t /= nn;
        return true;
    };
    if (!project_and_normalize(x)) return false;

    for (int iter = 0; iter < max_iter; ++iter) {
        double sum = 0.0;
        for (double t : x) sum += t;
        for (int i = 0; i < n; ++i) {
            double acc = -c * sum;
            for (int k = adj.offsets[i]; k < adj.offsets[i + 1]; ++k) acc += x[adj.neighbors[k]];
            y[i] = acc;
        }
        if (!project_and_normalize(y)) return false;
        // allow a negative dominant eigenvalue: compare up to sign
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += y[i] * x[i];
        const double sign = dot < 0.0 ? -1.0 : 1.0;
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = y[i] - sign * x[i];
            diff += d * d;
        }
        x.swap(y);
        if (std::sqrt(diff) < tol) return true;
    }
    return false;
}

// One synchronous round of neighbor majority voting. direction > 0 adopts the
// majority label, direction < 0 the minority; vote ties keep the current one.
void majority_round(const Csr& adj, int n, int direction, std::vector<std::int8_t>& sigma) {
    std::vector<std::int8_t> next(sigma);
    for (int i = 0; i < n; ++i) {
        int t = 0;
        for (int k = adj.offsets[i]; k < adj.offsets[i + 1]; ++k) t += sigma[adj.neighbors[k]];
        if (t != 0) next[i] = static_cast<std::int8_t>((t > 0) == (direction > 0) ? 1 : -1);
    }
    sigma.swap(next);
}

}  // namespace

SpectralRecovery recover_single(const Graph& g, const ModelParams& params_hint,
                                RandomStream& rng) {
    const int n = g.n();
    if (n < 4) throw std::invalid_argument("recover_single: needs n >= 4");

    const Csr adj(g);
    std::vector<double> x;
    const bool converged =
        dominant_centered_eigenvector(adj, n, g.edge_count(), 200, 1e-8, rng, x);

    std::vector<std::int8_t> sigma(n, 1);
    if (!x.empty())
        for (int i = 0; i < n; ++i) sigma[i] = x[i] >= 0.0 ? std::int8_t{1} : std::int8_t{-1};

    const double gap = params_hint.alpha - params_hint.beta;
    const int direction = gap > 0.0 ? 1 : gap < 0.0 ? -1 : 0;
    if (direction != 0) {
        majority_round(adj, n, direction, sigma);
        majority_round(adj, n, direction, sigma);
    }
    return {Labeling(std::move(sigma)), converged};
}

std::vector<Permutation> estimate_permutations(const CorrelatedFamily& family,
                                               const MatcherChoice& matcher, RandomStream& rng) {
    std::vector<Permutation> out;
    out.reserve(family.g_relabelled.size());
    for (std::size_t idx = 0; idx < family.g_relabelled.size(); ++idx) {
        const Graph& g2 = family.g_relabelled[idx];
        Permutation pi;
        switch (matcher.kind) {
            case MatcherKind::Exhaustive:
                pi = match_exhaustive(family.g1, g2, matcher.exhaustive_limit);
                break;
            case MatcherKind::LocalSearch: {
                SearchConfig cfg = matcher.search;
                cfg.seed = rng.next_u64();
                pi = match_local_search(family.g1, g2, cfg);
                break;
            }
            case MatcherKind::Map:
                pi = map_match_with_labels(family.g1, g2, family.labels,
                                           edge_joint_law(family.params), rng,
                                           matcher.exhaustive_limit);
                break;
            case MatcherKind::TrueInjected:
                pi = family.pi_star[idx];
                break;
        }
        out.push_back(std::move(pi));
    }
    return out;
}

namespace {

struct MatchOutcome {
    std::vector<Permutation> pi_hat;
    bool all_correct = true;
};

MatchOutcome run_matchers(const CorrelatedFamily& family, const MatcherChoice& matcher,
                          RandomStream& match_rng) {
    MatchOutcome out;
    out.pi_hat = estimate_permutations(family, matcher, match_rng);
    for (std::size_t idx = 0; idx < out.pi_hat.size(); ++idx)
        out.all_correct = out.all_correct && (out.pi_hat[idx] == family.pi_star[idx]);
    return out;
}

}  // namespace

RecoveryResult recover_k(const CorrelatedFamily& family, const MatcherChoice& matcher,
                         const RandomStream& rng) {
    if (family.params.k_graphs < 2 || family.g_relabelled.empty())
        throw std::invalid_argument("recover_k: family has no children");

    RandomStream match_rng = rng.split(stream_tag::matcher);
    RandomStream spectral_rng = rng.split(stream_tag::spectral);

    MatchOutcome match = run_matchers(family, matcher, match_rng);

    std::vector<std::pair<const Graph*, const Permutation*>> others;
    others.reserve(match.pi_hat.size());
    for (std::size_t idx = 0; idx < match.pi_hat.size(); ++idx)
        others.emplace_back(&family.g_relabelled[idx], &match.pi_hat[idx]);
    const Graph h = overlay_by_permutations(family.g1, others);

    SpectralRecovery rec = recover_single(h, family.params, spectral_rng);
    RecoveryResult out{std::move(rec.sigma_hat), 0.0, false, match.all_correct, rec.converged};
    out.overlap = overlap(out.sigma_hat, family.labels);
    out.exact = out.overlap == 1.0;
    return out;
}

RecoveryResult recover_pair(const CorrelatedFamily& family, const MatcherChoice& matcher,
                            const RandomStream& rng) {
    if (family.params.k_graphs != 2)
        throw std::invalid_argument("recover_pair: requires a K=2 family");
    return recover_k(family, matcher, rng);
}

RecoveryResult recover_two_stage(const CorrelatedFamily& family, const MatcherChoice& matcher,
                                 const RandomStream& rng) {
    if (family.params.k_graphs != 2)
        throw std::invalid_argument("recover_two_stage: requires a K=2 family");
    const int n = family.g1.n();

    RandomStream match_rng = rng.split(stream_tag::matcher);
    RandomStream spectral_rng = rng.split(stream_tag::spectral);

    MatchOutcome match = run_matchers(family, matcher, match_rng);
    const Permutation& pi_hat = match.pi_hat[0];
    const Permutation& pi_star = family.pi_star[0];

    std::vector<int> in_c(n, 0);
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
        if (pi_hat(i) == pi_star(i)) {
            in_c[i] = 1;
            members.push_back(i);
        }
    }

    RecoveryResult out{Labeling(std::vector<std::int8_t>(n, 1)), 0.0, false, match.all_correct,
                       true};
    out.c_size = static_cast<std::int64_t>(members.size());
    if (members.size() < 3) {
        out.degenerate = true;
        out.overlap = overlap(out.sigma_hat, family.labels);
        out.exact = out.overlap == 1.0;
        return out;
    }

    const Graph h =
        overlay_by_permutations(family.g1, {{&family.g_relabelled[0], &pi_hat}});

    // Stage 1: recover on the overlay restricted to the correctly matched set.
    Graph h_c(static_cast<int>(members.size()));
    std::vector<int> local(n, -1);
    for (std::size_t t = 0; t < members.size(); ++t) local[members[t]] = static_cast<int>(t);
    h.for_each_edge([&](int i, int j) {
        if (in_c[i] && in_c[j]) h_c.add_edge(local[i], local[j]);
    });

    std::vector<std::int8_t> sigma(n, 0);
    bool converged = true;
    if (h_c.n() >= 4) {
        SpectralRecovery rec = recover_single(h_c, family.params, spectral_rng);
        converged = rec.converged;
        for (std::size_t t = 0; t < members.size(); ++t)
            sigma[members[t]] = static_cast<std::int8_t>(rec.sigma_hat.sigma(static_cast<int>(t)));
    } else {
        for (int i : members) sigma[i] = 1;
    }

    // Stage 2: vertices outside C take the majority label of their overlay
    // neighbors inside C, in the direction given by sign(alpha-beta).
    const double gap = family.params.alpha - family.params.beta;
    const int direction = gap >= 0.0 ? 1 : -1;
    const Csr adj(h);
    for (int i = 0; i < n; ++i) {
        if (in_c[i]) continue;
        int t = 0;
        for (int k = adj.offsets[i]; k < adj.offsets[i + 1]; ++k) {
            const int j = adj.neighbors[k];
            if (in_c[j]) t += sigma[j];
        }
        sigma[i] = static_cast<std::int8_t>(t == 0 ? 1 : (t > 0) == (direction > 0) ? 1 : -1);
    }

    out.sigma_hat = Labeling(std::move(sigma));
    out.converged = converged;
    out.overlap = overlap(out.sigma_hat, family.labels);
    out.exact = out.overlap == 1.0;
    return out;
}

}  // namespace csbm
