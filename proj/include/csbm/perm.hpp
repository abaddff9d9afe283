#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "csbm/rng.hpp"

namespace csbm {

class Labeling;  // model.hpp

// Bijection of {0..n-1} stored as its one-line mapping.
class Permutation {
public:
    Permutation() = default;

    // Validates bijectivity; throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> mapping);

    static Permutation identity(int n);
    static Permutation random(int n, RandomStream& rng);

    int n() const { return static_cast<int>(map_.size()); }
    int operator()(int i) const { return map_[i]; }
    const std::vector<int>& mapping() const { return map_; }

    Permutation inverse() const;

    // (a.compose(b))(i) = a(b(i))
    Permutation compose(const Permutation& b) const;

    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> map_;
};

// File format: n lines, line i holds pi(i), 0-based.
Permutation read_permutation_file(const std::string& path);
void write_permutation(const Permutation& pi, std::ostream& out);
void write_permutation_file(const Permutation& pi, const std::string& path);

using VertexPair = std::pair<int, int>;  // normalized i < j

// Action of a vertex permutation on an unordered pair: {i,j} -> {pi(i), pi(j)}.
// Pre: i != j; result is returned normalized. Throws on i == j.
VertexPair lift_apply(const Permutation& pi, VertexPair pair);

// Cycle structure of the lifted map tau_star^{-1} o tau on the set of all
// unordered vertex pairs. Cycles of length one are reported separately as
// fixed points (exactly the pairs with tau(e) = tau_star(e)). Each cycle is
// listed starting from its lexicographically smallest pair, and cycles appear
// in order of those starting pairs; successive entries follow the composed
// map, so cycle[k+1] = (tau_star^{-1} o tau)(cycle[k]).
struct PairCycleDecomposition {
    std::vector<std::vector<VertexPair>> cycles;  // length >= 2 only
    std::vector<VertexPair> fixed_points;

    std::int64_t total_pairs() const;
};

PairCycleDecomposition pair_cycles(const Permutation& tau_star, const Permutation& tau);

// Vertex- and pair-level mismatch combinatorics between pi and pi_star for a
// fixed labeling: k1/k2 count mismatched vertices per community, m_plus and
// m_minus count same/different-community pairs whose lifted images disagree,
// and e_tr_plus/e_tr_minus count transposed pairs (pi swaps the two vertices'
// images relative to pi_star) in each pair class.
struct MismatchCounts {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    std::int64_t m_plus = 0;
    std::int64_t m_minus = 0;
    std::int64_t e_tr_plus = 0;
    std::int64_t e_tr_minus = 0;
};

// m_plus/m_minus come from the closed-form counting identity; non-release
// builds additionally recount them by direct pair enumeration and assert
// agreement, since that identity underpins the matcher analysis.
MismatchCounts mismatch_counts(const Labeling& labels, const Permutation& pi_star,
                               const Permutation& pi);

}  // namespace csbm
