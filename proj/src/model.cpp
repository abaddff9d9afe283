#include "csbm/model.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace csbm {

std::string to_string(Scaling s) {
    return s == Scaling::LogOverN ? "log" : "raw";
}

Scaling scaling_from_string(const std::string& s) {
    if (s == "log" || s == "LogOverN") return Scaling::LogOverN;
    if (s == "raw" || s == "RawProbability") return Scaling::RawProbability;
    throw std::invalid_argument("unknown scaling mode: " + s);
}

ModelParams::ModelParams(int n_, double alpha_, double beta_, double s_, int k_graphs_,
                         Scaling scaling_)
    : n(n_), alpha(alpha_), beta(beta_), s(s_), k_graphs(k_graphs_), scaling(scaling_) {
    if (n < 2) throw std::invalid_argument("ModelParams: n must be at least 2");
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw std::invalid_argument("ModelParams: alpha and beta must be nonnegative");
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("ModelParams: s must lie in [0,1]");
    if (k_graphs < 2) throw std::invalid_argument("ModelParams: k_graphs must be at least 2");
    const double p = intra_p(), q = inter_q();
    if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("ModelParams: derived edge probabilities outside [0,1]");
}

double ModelParams::intra_p() const {
    return scaling == Scaling::LogOverN ? alpha * std::log(static_cast<double>(n)) / n : alpha;
}

double ModelParams::inter_q() const {
    return scaling == Scaling::LogOverN ? beta * std::log(static_cast<double>(n)) / n : beta;
}

Labeling::Labeling(std::vector<std::int8_t> sigma) : sigma_(std::move(sigma)) {
    for (auto v : sigma_)
        if (v != 1 && v != -1) throw std::invalid_argument("Labeling: entries must be +1 or -1");
}

std::vector<int> Labeling::v_plus() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (sigma_[i] > 0) out.push_back(i);
    return out;
}

std::vector<int> Labeling::v_minus() const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (sigma_[i] < 0) out.push_back(i);
    return out;
}

std::int64_t Labeling::plus_count() const {
    std::int64_t c = 0;
    for (auto v : sigma_) c += (v > 0);
    return c;
}

std::vector<std::uint64_t> Labeling::plus_mask(int words_per_row) const {
    std::vector<std::uint64_t> mask(words_per_row, 0);
    for (int i = 0; i < n(); ++i)
        if (sigma_[i] > 0) mask[static_cast<unsigned>(i) >> 6] |= 1ull << (i & 63);
    return mask;
}

std::vector<std::int8_t> read_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labels file: " + path);
    std::vector<std::int8_t> sigma;
    int v;
    while (in >> v) sigma.push_back(static_cast<std::int8_t>(v));
    return sigma;
}

void write_labels_file(const Labeling& labels, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    for (int i = 0; i < labels.n(); ++i) out << int(labels.sigma(i)) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

EdgeJointLaw edge_joint_law(const ModelParams& params) {
    const double s = params.s, p = params.intra_p(), q = params.inter_q();
    EdgeJointLaw law;
    law.p11 = s * s * p;
    law.p10 = law.p01 = s * (1.0 - s) * p;
    law.p00 = 1.0 - p * (2.0 * s - s * s);
    law.q11 = s * s * q;
    law.q10 = law.q01 = s * (1.0 - s) * q;
    law.q00 = 1.0 - q * (2.0 * s - s * s);
    return law;
}

Labeling sample_labeling(const ModelParams& params, RandomStream& rng) {
    std::vector<std::int8_t> sigma(params.n);
    for (auto& v : sigma) v = (rng.next_u64() & 1) ? std::int8_t{1} : std::int8_t{-1};
    return Labeling(std::move(sigma));
}

namespace {

// Visits the indices of a virtual Bernoulli(p) sequence of given length that
// come up heads, via geometric skipping, in increasing order.
template <typename Fn>
void sample_bernoulli_indices(std::uint64_t length, double p, RandomStream& rng, Fn&& fn) {
    if (p <= 0.0 || length == 0) return;
    std::uint64_t idx = rng.geometric_skip(p);
    while (idx < length) {
        fn(idx);
        std::uint64_t skip = rng.geometric_skip(p);
        if (length - idx <= skip + 1) break;  // avoid overflow near the end
        idx += skip + 1;
    }
}

}  // namespace

Graph sample_sbm(const ModelParams& params, const Labeling& labels, RandomStream& rng) {
    if (labels.n() != params.n) throw std::invalid_argument("sample_sbm: labeling size mismatch");
    const double p = params.intra_p(), q = params.inter_q();
    Graph g(params.n);

    const std::vector<int> plus = labels.v_plus();
    const std::vector<int> minus = labels.v_minus();

    // Intra pairs of one side, enumerated as a flat triangular index space.
    auto sample_within = [&](const std::vector<int>& side) {
        const std::uint64_t m = side.size();
        if (m < 2) return;
        // decode flat index -> (a, b) incrementally; indices arrive sorted
        std::uint64_t row = 0, row_start = 0, row_len = m - 1;
        sample_bernoulli_indices(m * (m - 1) / 2, p, rng, [&](std::uint64_t t) {
            while (t - row_start >= row_len) {
                row_start += row_len;
                --row_len;
                ++row;
            }
            std::uint64_t col = row + 1 + (t - row_start);
            g.add_edge(side[row], side[static_cast<std::size_t>(col)]);
        });
    };
    sample_within(plus);
    sample_within(minus);

    const std::uint64_t np = plus.size(), nm = minus.size();
    if (np > 0 && nm > 0) {
        sample_bernoulli_indices(np * nm, q, rng, [&](std::uint64_t t) {
            g.add_edge(plus[static_cast<std::size_t>(t / nm)],
                       minus[static_cast<std::size_t>(t % nm)]);
        });
    }
    return g;
}

Graph subsample(const Graph& parent, double s, RandomStream& rng) {
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("subsample: s must lie in [0,1]");
    Graph out(parent.n());
    if (s <= 0.0) return out;
    parent.for_each_edge([&](int i, int j) {
        if (rng.bernoulli(s)) out.add_edge(i, j);
    });
    return out;
}

Graph relabel(const Graph& g, const Permutation& pi) {
    if (pi.n() != g.n()) throw std::invalid_argument("relabel: permutation size mismatch");
    Graph out(g.n());
    g.for_each_edge([&](int i, int j) { out.add_edge(pi(i), pi(j)); });
    return out;
}

Graph unrelabel(const Graph& g, const Permutation& pi) {
    return relabel(g, pi.inverse());
}

CorrelatedFamily generate_family(const ModelParams& params, RandomStream& rng) {
    CorrelatedFamily fam;
    fam.params = params;
    fam.labels = sample_labeling(params, rng);
    fam.parent = sample_sbm(params, fam.labels, rng);
    fam.g1 = subsample(fam.parent, params.s, rng);
    fam.g_prime.reserve(params.k_graphs - 1);
    fam.g_relabelled.reserve(params.k_graphs - 1);
    fam.pi_star.reserve(params.k_graphs - 1);
    for (int k = 2; k <= params.k_graphs; ++k) {
        fam.g_prime.push_back(subsample(fam.parent, params.s, rng));
        fam.pi_star.push_back(Permutation::random(params.n, rng));
        fam.g_relabelled.push_back(relabel(fam.g_prime.back(), fam.pi_star.back()));
    }
    return fam;
}

Graph overlay_by_permutations(
    const Graph& g1, const std::vector<std::pair<const Graph*, const Permutation*>>& others) {
    Graph out = g1;
    for (const auto& [g, pi] : others) {
        if (g->n() != g1.n() || pi->n() != g1.n())
            throw std::invalid_argument("overlay_by_permutations: size mismatch");
        // (i,j) joins iff (pi(i), pi(j)) is an edge of *g, i.e. g pulled back.
        const Permutation inv = pi->inverse();
        g->for_each_edge([&](int u, int v) { out.add_edge(inv(u), inv(v)); });
    }
    return out;
}

std::pair<Graph, Graph> split_union_pair(const Graph& h, double s, RandomStream& rng) {
    auto parts = split_union_k(h, s, 2, rng);
    return {std::move(parts[0]), std::move(parts[1])};
}

double split_pattern_probability(double s, int k, unsigned x) {
    if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("split pattern: s must lie in (0,1]");
    if (k < 2) throw std::invalid_argument("split pattern: k must be at least 2");
    if (x == 0 || x >= (1u << k)) throw std::invalid_argument("split pattern: x out of range");
    const int ones = std::popcount(x);
    return std::pow(s, ones) * std::pow(1.0 - s, k - ones) / (1.0 - std::pow(1.0 - s, k));
}

std::vector<Graph> split_union_k(const Graph& h, double s, int k, RandomStream& rng) {
    if (!(s > 0.0 && s <= 1.0))
        throw std::invalid_argument("split_union_k: s must lie in (0,1] (s=0 has no conditional law)");
    if (k < 2) throw std::invalid_argument("split_union_k: k must be at least 2");
    if (k > 30) throw std::invalid_argument("split_union_k: k too large for pattern enumeration");

    // Cumulative distribution over the 2^k - 1 nonzero membership patterns.
    const unsigned npat = (1u << k) - 1;
    std::vector<double> cdf(npat);
    double acc = 0.0;
    for (unsigned x = 1; x <= npat; ++x) {
        acc += split_pattern_probability(s, k, x);
        cdf[x - 1] = acc;
    }
    cdf[npat - 1] = 1.0;  // guard the tail against accumulated rounding

    std::vector<Graph> out(static_cast<std::size_t>(k), Graph(h.n()));
    h.for_each_edge([&](int i, int j) {
        const double u = rng.real01();
        unsigned x = 1 + static_cast<unsigned>(
                             std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        for (int t = 0; t < k; ++t)
            if ((x >> t) & 1u) out[t].add_edge(i, j);
    });
    return out;
}

PairJointCounts tally_pair_joint(const Graph& a, const Graph& b, const Labeling& labels) {
    if (a.n() != b.n() || labels.n() != a.n())
        throw std::invalid_argument("tally_pair_joint: size mismatch");
    const int n = a.n(), words = a.words_per_row();
    const std::vector<std::uint64_t> plus = labels.plus_mask(words);

    PairJointCounts out;
    std::vector<std::uint64_t> upper(words);
    for (int i = 0; i < n; ++i) {
        // mask of columns j > i
        for (int w = 0; w < words; ++w) upper[w] = 0;
        for (int w = (i + 1) >> 6; w < words; ++w) upper[w] = ~0ull;
        if ((i + 1) & 63) upper[(i + 1) >> 6] &= ~0ull << ((i + 1) & 63);
        if (n & 63) upper[words - 1] &= (~0ull) >> (64 - (n & 63));

        auto ra = a.row(i), rb = b.row(i);
        const bool i_plus = labels.sigma(i) > 0;
        std::int64_t c11 = 0, c10 = 0, c01 = 0, same_total = 0, row_total = 0;
        for (int w = 0; w < words; ++w) {
            const std::uint64_t same = (i_plus ? plus[w] : ~plus[w]) & upper[w];
            const std::uint64_t aw = ra[w] & same, bw = rb[w] & same;
            c11 += std::popcount(aw & bw);
            c10 += std::popcount(aw & ~bw);
            c01 += std::popcount(bw & ~aw);
            same_total += std::popcount(same);
            row_total += std::popcount(upper[w]);
        }
        out.intra[3] += c11;
        out.intra[2] += c10;
        out.intra[1] += c01;
        out.intra[0] += same_total - c11 - c10 - c01;

        std::int64_t d11 = 0, d10 = 0, d01 = 0;
        for (int w = 0; w < words; ++w) {
            const std::uint64_t diff = (i_plus ? ~plus[w] : plus[w]) & upper[w];
            const std::uint64_t aw = ra[w] & diff, bw = rb[w] & diff;
            d11 += std::popcount(aw & bw);
            d10 += std::popcount(aw & ~bw);
            d01 += std::popcount(bw & ~aw);
        }
        out.inter[3] += d11;
        out.inter[2] += d10;
        out.inter[1] += d01;
        out.inter[0] += (row_total - same_total) - d11 - d10 - d01;
    }
    return out;
}

void export_family(const CorrelatedFamily& family, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    write_labels_file(family.labels, dir + "/labels.txt");
    write_edge_list_file(family.parent, dir + "/parent.edges");
    write_edge_list_file(family.g1, dir + "/g1.edges");
    for (std::size_t idx = 0; idx < family.g_prime.size(); ++idx) {
        const std::string k = std::to_string(idx + 2);
        write_edge_list_file(family.g_prime[idx], dir + "/g" + k + "_prime.edges");
        write_edge_list_file(family.g_relabelled[idx], dir + "/g" + k + ".edges");
        write_permutation_file(family.pi_star[idx], dir + "/pi_star_" + k + ".perm");
    }
}

CorrelatedFamily import_family(const std::string& dir, const ModelParams& params) {
    CorrelatedFamily fam;
    fam.params = params;
    fam.labels = Labeling(read_labels_file(dir + "/labels.txt"));
    fam.parent = read_edge_list_file(dir + "/parent.edges");
    fam.g1 = read_edge_list_file(dir + "/g1.edges");
    for (int k = 2; k <= params.k_graphs; ++k) {
        const std::string ks = std::to_string(k);
        fam.g_prime.push_back(read_edge_list_file(dir + "/g" + ks + "_prime.edges"));
        fam.g_relabelled.push_back(read_edge_list_file(dir + "/g" + ks + ".edges"));
        fam.pi_star.push_back(read_permutation_file(dir + "/pi_star_" + ks + ".perm"));
    }
    if (fam.labels.n() != params.n || fam.parent.n() != params.n)
        throw std::runtime_error("import_family: sizes inconsistent with params");
    return fam;
}

}  // namespace csbm
