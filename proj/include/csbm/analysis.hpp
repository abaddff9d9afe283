#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csbm/model.hpp"

namespace csbm {

// Phase regions for exact community recovery at rate parameters (alpha, beta)
// and subsampling s. Green: recoverable from one child graph alone. Cyan:
// not from one graph, but from the pair union, and exact matching is
// feasible. Yellow: the pair union would suffice but matching is infeasible.
// Red: even the aligned pair union is not enough. Comparisons are strict;
// within 1e-12 of any deciding equality the point is reported as boundary.
enum class Region {
    Green,
    Cyan,
    Yellow,
    Red,
    BoundaryIndeterminate,
};

std::string to_string(Region region);
Region region_from_string(const std::string& s);

struct RegionVerdict {
    Region region = Region::Red;
    bool matching_feasible = false;  // s^2 (alpha+beta)/2 > 1
    bool single_graph = false;       // |sqrt(a)-sqrt(b)| > sqrt(2/s)
    bool pair_union = false;         // ... > sqrt(2/(1-(1-s)^2))
    bool k_union = false;            // ... > sqrt(2/(1-(1-s)^K))
};

// Classifies (alpha, beta, s, K). Only those fields of params are read, so a
// grid may span rate values that no single (n, scaling) turns into a valid
// probability. s=0 makes the graph thresholds infinite: verdicts false.
RegionVerdict thresholds(const ModelParams& params);

// Evenly spaced axis over one of "alpha", "beta", "s".
struct PhaseAxis {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    int count = 2;

    double value(int idx) const;
};

struct PhaseGrid {
    PhaseAxis x;
    PhaseAxis y;
    ModelParams base;
    std::vector<RegionVerdict> cells;  // row-major, cells[iy * x.count + ix]

    const RegionVerdict& at(int ix, int iy) const { return cells[static_cast<std::size_t>(iy) * x.count + ix]; }
};

// Dense verdict grid over two distinct axes; remaining parameters come from
// base. Axis ranges are validated (s within [0,1], rates nonnegative).
PhaseGrid phase_grid(const PhaseAxis& x, const PhaseAxis& y, const ModelParams& base);

// Columns: x, y, region, matching_feasible, single, pair, k_union.
void write_phase_csv(const PhaseGrid& grid, const std::string& path);

// Heat map with one rect per cell, colored green/cyan/yellow/red and gray on
// boundary cells.
void write_phase_svg(const PhaseGrid& grid, const std::string& path);

// Arguments of the cycle generating function E[theta^X omega^Y+ zeta^Y-]
// together with the per-slot edge law and the community type lambda_k of each
// pair along the cycle (+1 intra, -1 inter).
struct PgfParams {
    double theta = 1.0;
    double omega = 1.0;
    double zeta = 1.0;
    EdgeJointLaw law;
    std::vector<int> lambda_pattern;
};

// One step of the recursion: phi[(i*2+j)*2 + m] conditions on the first
// pair's values (a1,b1) = (i,j) and on the next pair's b-value m.
struct PgfTable {
    int k = 0;
    std::array<double, 8> phi{};

    double at(int i, int j, int m) const { return phi[static_cast<std::size_t>((i * 2 + j) * 2 + m)]; }
};

// k=1 slice: theta^-1 for (1,0,m=1); theta*omega or theta*zeta for (1,1,m=0)
// by lambda_1; omega or zeta for (1,1,m=1); 1 otherwise.
PgfTable pgf_initial(const PgfParams& params);

// Advances k-1 -> k (2 <= step <= pattern length) with the p-quadruple and
// omega when lambda_step = +1, the q-quadruple and zeta when -1.
PgfTable pgf_advance(const PgfTable& table, const PgfParams& params, int step);

// Full cycle value: run the recursion to the pattern length L and combine as
// sum_ij w_ij phi_{L,ij,j}, where w is the lambda_1-appropriate quadruple.
double pgf_cycle(const PgfParams& params);

// Product of pgf_cycle over the non-fixed cycles of the pair decomposition of
// (pi_star, pi), with each cycle's lambda pattern read off the labels. The
// lambda_pattern field of params is ignored. Sizes must agree and n <= 200.
double pgf_full(const Labeling& labels, const Permutation& pi_star, const Permutation& pi,
                const PgfParams& params);

// Direct simulation oracle for pgf_cycle: draws the per-slot pair values
// independently from the slot law, forms X = sum_k a_k b_k - a_k b_{k+1}
// (cyclic) and Y+/- = sum over slots of each sign, and averages
// theta^X omega^Y+ zeta^Y-.
struct PgfMonteCarlo {
    double mean = 0.0;
    double se = 0.0;
};

PgfMonteCarlo pgf_cycle_monte_carlo(const PgfParams& params, std::int64_t samples,
                                    RandomStream& rng);

// Numeric check of the exponential cycle bound: at theta = 1/sqrt(n),
// omega = zeta = e, the cycle value should not exceed
// exp(-(1-eps) s^2 (alpha c+ + beta c-) log(n)/n), with c+/- the intra/inter
// slot counts and the law built at LogOverN scale for this n. The bound is
// asymptotic, so the comparison is reported, not asserted.
struct CycleBoundCheck {
    double value = 0.0;
    double bound = 0.0;
    bool holds = false;
};

CycleBoundCheck pgf_cycle_bound_check(double alpha, double beta, double s, double n,
                                      const std::vector<int>& lambda_pattern, double eps);

// The recursion is defined for any positive arguments but was analyzed for
// omega, zeta in [1,3]; outside that range callers get a note per argument.
std::vector<std::string> pgf_range_warnings(const PgfParams& params);

}  // namespace csbm
