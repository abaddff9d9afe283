#include "csbm/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace csbm {

std::int64_t agreement_score(const Graph& g1, const Graph& g2, const Permutation& pi) {
    const int n = g1.n();
    if (g2.n() != n || pi.n() != n) throw std::invalid_argument("agreement_score: size mismatch");
    std::int64_t score = 0;
    g1.for_each_edge([&](int i, int j) { score += g2.has_edge(pi(i), pi(j)); });
    return score;
}

MatchScore score_stats(const CorrelatedFamily& family, const Permutation& pi) {
    if (family.params.k_graphs != 2)
        throw std::invalid_argument("score_stats: requires a K=2 family");
    const Graph& g1 = family.g1;
    const Graph& g2 = family.g_relabelled[0];
    const Permutation& pi_star = family.pi_star[0];
    if (pi.n() != g1.n()) throw std::invalid_argument("score_stats: size mismatch");

    MatchScore out;
    out.agreements = agreement_score(g1, g2, pi);
    out.x_stat = agreement_score(g1, g2, pi_star) - out.agreements;
    const int n = g1.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (pi(i) == pi_star(i) && pi(j) == pi_star(j)) continue;
            if (lift_apply(pi, {i, j}) == lift_apply(pi_star, {i, j})) continue;  // transposed pair
            if (!g1.has_edge(i, j) || !g2.has_edge(pi_star(i), pi_star(j))) continue;
            (family.labels.same_community(i, j) ? out.y_plus : out.y_minus) += 1;
        }
    }
    return out;
}

Permutation match_exhaustive(const Graph& g1, const Graph& g2, int limit, ExhaustiveStats* stats) {
    const int n = g1.n();
    if (g2.n() != n) throw std::invalid_argument("match_exhaustive: size mismatch");
    if (n > limit)
        throw std::invalid_argument("match_exhaustive: n exceeds the exhaustive limit");

    std::vector<int> mapping(n);
    std::iota(mapping.begin(), mapping.end(), 0);
    std::vector<int> best = mapping;
    std::int64_t best_score = -1, ties = 0;
    do {
        std::int64_t score = 0;
        g1.for_each_edge([&](int i, int j) { score += g2.has_edge(mapping[i], mapping[j]); });
        if (score > best_score) {
            best_score = score;
            best = mapping;
            ties = 1;
        } else if (score == best_score) {
            ++ties;  // lexicographic scan order: first maximizer already kept
        }
    } while (std::next_permutation(mapping.begin(), mapping.end()));

    if (stats) {
        stats->best_score = best_score;
        stats->tie_count = ties;
    }
    return Permutation(std::move(best));
}

namespace {

// Score change from swapping the images of u and v; only pairs touching u or
// v are affected, and the (u,v) pair itself is invariant under the swap.
std::int64_t swap_delta(const Graph& g1, const Graph& g2, const std::vector<int>& map, int u,
                        int v) {
    std::int64_t delta = 0;
    const int pu = map[u], pv = map[v];
    const int n = g1.n();
    for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const int pw = map[w];
        if (g1.has_edge(u, w)) delta += g2.has_edge(pv, pw) - g2.has_edge(pu, pw);
        if (g1.has_edge(v, w)) delta += g2.has_edge(pu, pw) - g2.has_edge(pv, pw);
    }
    return delta;
}

// Greedy assignment on neighbor-degree profiles: each vertex carries the
// sorted degree sequence of its neighborhood, pairs are matched globally by
// ascending L1 profile distance. Far more collision-resistant than matching
// on scalar degree alone. A jitter stream, when supplied, randomly skips
// entries on the first pass so restarts explore alternative commitments.
std::vector<int> degree_greedy_init(const Graph& g1, const Graph& g2,
                                    RandomStream* jitter = nullptr) {
    const int n = g1.n();
    auto profiles = [n](const Graph& g) {
        std::vector<std::vector<int>> out(n);
        for (int i = 0; i < n; ++i) {
            auto& prof = out[i];
            prof.reserve(static_cast<std::size_t>(g.degree(i)));
            for (int j = 0; j < n; ++j) {
                if (j != i && g.has_edge(i, j)) prof.push_back(g.degree(j));
            }
            std::sort(prof.begin(), prof.end(), std::greater<>());
        }
        return out;
    };
    const auto prof1 = profiles(g1);
    const auto prof2 = profiles(g2);

    auto distance = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::int64_t d = 0;
        const std::size_t common = std::min(a.size(), b.size());
        for (std::size_t k = 0; k < common; ++k) d += std::abs(a[k] - b[k]);
        for (std::size_t k = common; k < a.size(); ++k) d += a[k];
        for (std::size_t k = common; k < b.size(); ++k) d += b[k];
        return d;
    };

    struct Entry {
        std::int64_t d;
        int i;
        int u;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int u = 0; u < n; ++u) entries.push_back({distance(prof1[i], prof2[u]), i, u});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.d, a.i, a.u) < std::tie(b.d, b.i, b.u);
    });

    std::vector<char> used1(n, 0), used2(n, 0);
    std::vector<int> map(n, -1);
    int placed = 0;
    for (const auto& e : entries) {
        if (used1[e.i] || used2[e.u]) continue;
        if (jitter != nullptr && jitter->bernoulli(0.3)) continue;
        map[e.i] = e.u;
        used1[e.i] = used2[e.u] = 1;
        if (++placed == n) break;
    }
    for (const auto& e : entries) {
        if (placed == n) break;
        if (used1[e.i] || used2[e.u]) continue;
        map[e.i] = e.u;
        used1[e.i] = used2[e.u] = 1;
        ++placed;
    }
    return map;
}

struct ClimbResult {
    std::vector<int> map;
    std::int64_t score = 0;
};

ClimbResult hill_climb(const Graph& g1, const Graph& g2, std::vector<int> map,
                       std::int64_t max_moves, RandomStream& rng) {
    const int n = g1.n();
    std::int64_t score = 0;
    g1.for_each_edge([&](int i, int j) { score += g2.has_edge(map[i], map[j]); });

    std::vector<std::pair<int, int>> candidates;
    candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);

    std::int64_t attempts = 0;
    bool improved = true;
    while (improved && attempts < max_moves) {
        improved = false;
        rng.shuffle(candidates);  // fresh scan order each sweep
        for (const auto& [u, v] : candidates) {
            if (attempts++ >= max_moves) break;
            const std::int64_t delta = swap_delta(g1, g2, map, u, v);
            if (delta > 0) {
                std::swap(map[u], map[v]);
                score += delta;
                improved = true;
            }
        }
    }
    return {std::move(map), score};
}

}  // namespace

Permutation match_local_search(const Graph& g1, const Graph& g2, const SearchConfig& config) {
    const int n = g1.n();
    if (g2.n() != n) throw std::invalid_argument("match_local_search: size mismatch");
    if (config.restarts < 0) throw std::invalid_argument("match_local_search: restarts < 0");
    if (n == 1) return Permutation::identity(1);

    const std::int64_t max_moves =
        config.max_moves > 0 ? config.max_moves : 50 * static_cast<std::int64_t>(n) * n;
    RandomStream rng(config.seed);

    std::vector<int> init;
    if (config.init) {
        init = *config.init;
        Permutation check(init);  // validate caller-provided start
    } else {
        init = degree_greedy_init(g1, g2);
    }

    ClimbResult best = hill_climb(g1, g2, std::move(init), max_moves, rng);
    for (int r = 0; r < config.restarts; ++r) {
        // Even restarts re-run the greedy init with jitter; odd restarts kick
        // the incumbent with a burst of random swaps and re-climb.
        std::vector<int> start;
        if (r % 2 == 0) {
            start = degree_greedy_init(g1, g2, &rng);
        } else {
            start = best.map;
            const int kicks = 2 + n / 8;
            for (int t = 0; t < kicks; ++t) {
                const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
                std::swap(start[u], start[v]);
            }
        }
        ClimbResult cur = hill_climb(g1, g2, std::move(start), max_moves, rng);
        if (cur.score > best.score) best = std::move(cur);
    }
    return Permutation(std::move(best.map));
}

PosteriorStats posterior_stats(const Graph& g1, const Graph& g2, const Labeling& labels,
                               const EdgeJointLaw& law, const Permutation& pi) {
    const int n = g1.n();
    if (g2.n() != n || labels.n() != n || pi.n() != n)
        throw std::invalid_argument("posterior_stats: size mismatch");

    PosteriorStats out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool a = g1.has_edge(i, j);
            const bool b = g2.has_edge(pi(i), pi(j));
            if (labels.same_community(i, j)) {
                out.mu_plus_11 += a && b;
                out.nu_plus += b;
            } else {
                out.mu_minus_11 += a && b;
                out.nu_minus += b;
            }
        }
    }
    out.log_posterior_unnormalized =
        out.mu_plus_11 * std::log(law.p00 * law.p11 / (law.p01 * law.p10)) +
        out.mu_minus_11 * std::log(law.q00 * law.q11 / (law.q01 * law.q10)) +
        out.nu_plus * std::log(law.p01 / law.p00) + out.nu_minus * std::log(law.q01 / law.q00);
    return out;
}

Permutation map_match_with_labels(const Graph& g1, const Graph& g2, const Labeling& labels,
                                  const EdgeJointLaw& law, RandomStream& rng, int limit) {
    const int n = g1.n();
    if (g2.n() != n || labels.n() != n)
        throw std::invalid_argument("map_match_with_labels: size mismatch");
    if (n > limit)
        throw std::invalid_argument("map_match_with_labels: n exceeds the enumeration limit");
    for (double cell : {law.p00, law.p01, law.p10, law.p11, law.q00, law.q01, law.q10, law.q11})
        if (!(cell > 0.0))
            throw std::invalid_argument(
                "map_match_with_labels: joint law has a zero cell; posterior log-weights undefined");

    const double w_mu_p = std::log(law.p00 * law.p11 / (law.p01 * law.p10));
    const double w_mu_q = std::log(law.q00 * law.q11 / (law.q01 * law.q10));
    const double w_nu_p = std::log(law.p01 / law.p00);
    const double w_nu_q = std::log(law.q01 / law.q00);

    std::vector<int> mapping(n);
    std::iota(mapping.begin(), mapping.end(), 0);
    std::vector<int> chosen = mapping;
    double best = -std::numeric_limits<double>::infinity();
    std::uint64_t ties = 0;
    do {
        std::int64_t mu_p = 0, mu_q = 0, nu_p = 0, nu_q = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const bool a = g1.has_edge(i, j);
                const bool b = g2.has_edge(mapping[i], mapping[j]);
                if (labels.same_community(i, j)) {
                    mu_p += a && b;
                    nu_p += b;
                } else {
                    mu_q += a && b;
                    nu_q += b;
                }
            }
        }
        const double lp = mu_p * w_mu_p + mu_q * w_mu_q + nu_p * w_nu_p + nu_q * w_nu_q;
        if (lp > best) {
            best = lp;
            chosen = mapping;
            ties = 1;
        } else if (lp == best) {
            // reservoir: keep each argmax element with probability 1/ties
            if (rng.below(++ties) == 0) chosen = mapping;
        }
    } while (std::next_permutation(mapping.begin(), mapping.end()));

    return Permutation(std::move(chosen));
}

AnchorSets anchor_sets(const Graph& g1, const Graph& g2, const Permutation& pi,
                       const Labeling& labels) {
    const int n = g1.n();
    if (g2.n() != n || pi.n() != n || labels.n() != n)
        throw std::invalid_argument("anchor_sets: size mismatch");
    const Graph agree = intersection_graph(g1, unrelabel(g2, pi));
    AnchorSets out;
    out.t_all = agree.isolated_vertices();
    for (int v : out.t_all) (labels.sigma(v) > 0 ? out.t_plus : out.t_minus).push_back(v);
    return out;
}

}  // namespace csbm
