#include "csbm/perm.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "csbm/model.hpp"

namespace csbm {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    const int n = static_cast<int>(map_.size());
    std::vector<bool> seen(n, false);
    for (int v : map_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("Permutation: mapping is not a bijection of 0..n-1");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    Permutation p;
    p.map_ = std::move(m);  // bijective by construction
    return p;
}

Permutation Permutation::random(int n, RandomStream& rng) {
    Permutation p = identity(n);
    rng.shuffle(p.map_);
    return p;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.map_.resize(map_.size());
    for (int i = 0; i < n(); ++i) out.map_[map_[i]] = i;
    return out;
}

Permutation Permutation::compose(const Permutation& b) const {
    if (n() != b.n()) throw std::invalid_argument("Permutation::compose: sizes differ");
    Permutation out;
    out.map_.resize(map_.size());
    for (int i = 0; i < n(); ++i) out.map_[i] = map_[b.map_[i]];
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (map_[i] != i) return false;
    return true;
}

Permutation read_permutation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open permutation file: " + path);
    std::vector<int> m;
    int v;
    while (in >> v) m.push_back(v);
    return Permutation(std::move(m));
}

void write_permutation(const Permutation& pi, std::ostream& out) {
    for (int i = 0; i < pi.n(); ++i) out << pi(i) << '\n';
}

void write_permutation_file(const Permutation& pi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for write: " + path);
    write_permutation(pi, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

VertexPair lift_apply(const Permutation& pi, VertexPair pair) {
    if (pair.first == pair.second)
        throw std::invalid_argument("lift_apply: pair must have distinct vertices");
    int a = pi(pair.first), b = pi(pair.second);
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

std::int64_t PairCycleDecomposition::total_pairs() const {
    std::int64_t total = static_cast<std::int64_t>(fixed_points.size());
    for (const auto& c : cycles) total += static_cast<std::int64_t>(c.size());
    return total;
}

namespace {

inline std::size_t pair_index(int n, int i, int j) {
    // lexicographic rank of (i, j) with i < j among all C(n,2) pairs
    return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace

PairCycleDecomposition pair_cycles(const Permutation& tau_star, const Permutation& tau) {
    const int n = tau.n();
    if (tau_star.n() != n) throw std::invalid_argument("pair_cycles: sizes differ");
    const Permutation rho = tau_star.inverse().compose(tau);  // lifted map acts via rho

    PairCycleDecomposition out;
    std::vector<bool> visited(static_cast<std::size_t>(n) * (n - 1) / 2, false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (visited[pair_index(n, i, j)]) continue;
            // Scanning pairs in lexicographic order guarantees the orbit
            // starts at its smallest element.
            VertexPair start{i, j};
            VertexPair e = lift_apply(rho, start);
            if (e == start) {
                visited[pair_index(n, i, j)] = true;
                out.fixed_points.push_back(start);
                continue;
            }
            std::vector<VertexPair> cycle{start};
            visited[pair_index(n, i, j)] = true;
            while (e != start) {
                visited[pair_index(n, e.first, e.second)] = true;
                cycle.push_back(e);
                e = lift_apply(rho, e);
            }
            out.cycles.push_back(std::move(cycle));
        }
    }
    return out;
}

namespace {

#ifndef NDEBUG
// Direct recount of the closed-form m_plus/m_minus: walk every unordered
// pair and test whether its lifted images under pi and pi_star differ.
std::pair<std::int64_t, std::int64_t> enumerate_mismatched_pairs(const Labeling& labels,
                                                                 const Permutation& pi_star,
                                                                 const Permutation& pi) {
    std::int64_t m_plus = 0, m_minus = 0;
    const int n = pi.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (lift_apply(pi, {i, j}) == lift_apply(pi_star, {i, j})) continue;
            (labels.same_community(i, j) ? m_plus : m_minus) += 1;
        }
    }
    return {m_plus, m_minus};
}
#endif

}  // namespace

MismatchCounts mismatch_counts(const Labeling& labels, const Permutation& pi_star,
                               const Permutation& pi) {
    const int n = pi.n();
    if (pi_star.n() != n || labels.n() != n)
        throw std::invalid_argument("mismatch_counts: sizes differ");

    MismatchCounts out;
    std::int64_t n_plus = 0;
    for (int i = 0; i < n; ++i) {
        bool plus = labels.sigma(i) > 0;
        n_plus += plus;
        if (pi(i) != pi_star(i)) (plus ? out.k1 : out.k2) += 1;
    }
    const std::int64_t n_minus = n - n_plus;

    // Transposed pairs: pi swaps the images the two vertices have under
    // pi_star. Each mismatched vertex belongs to at most one such pair, found
    // directly via u's partner candidate pi_star^{-1}(pi(u)).
    const Permutation star_inv = pi_star.inverse();
    for (int u = 0; u < n; ++u) {
        if (pi(u) == pi_star(u)) continue;
        int v = star_inv(pi(u));
        if (v <= u) continue;  // count each unordered pair once
        if (pi(v) == pi_star(u))
            (labels.same_community(u, v) ? out.e_tr_plus : out.e_tr_minus) += 1;
    }

    // Closed forms: a same-community pair moves iff it touches a mismatched
    // vertex and is not transposed; a cross pair likewise.
    out.m_plus = out.k1 * (out.k1 - 1) / 2 + out.k1 * (n_plus - out.k1) +
                 out.k2 * (out.k2 - 1) / 2 + out.k2 * (n_minus - out.k2) - out.e_tr_plus;
    out.m_minus = out.k1 * n_minus + out.k2 * n_plus - out.k1 * out.k2 - out.e_tr_minus;

#ifndef NDEBUG
    auto [mp, mm] = enumerate_mismatched_pairs(labels, pi_star, pi);
    assert(out.m_plus == mp && "closed-form m_plus disagrees with enumeration");
    assert(out.m_minus == mm && "closed-form m_minus disagrees with enumeration");
#endif
    return out;
}

}  // namespace csbm
