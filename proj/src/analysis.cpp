#include "csbm/analysis.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace csbm {

std::string to_string(Region region) {
    switch (region) {
        case Region::Green: return "green";
        case Region::Cyan: return "cyan";
        case Region::Yellow: return "yellow";
        case Region::Red: return "red";
        case Region::BoundaryIndeterminate: return "boundary";
    }
    return "?";
}

Region region_from_string(const std::string& s) {
    if (s == "green") return Region::Green;
    if (s == "cyan") return Region::Cyan;
    if (s == "yellow") return Region::Yellow;
    if (s == "red") return Region::Red;
    if (s == "boundary") return Region::BoundaryIndeterminate;
    throw std::invalid_argument("unknown region: " + s);
}

namespace {

constexpr double kBoundaryBand = 1e-12;

double union_exponent_threshold(double effective) {
    if (effective <= 0.0) return std::numeric_limits<double>::infinity();
    return std::sqrt(2.0 / effective);
}

bool near_boundary(double lhs, double rhs) {
    if (!std::isfinite(rhs)) return false;
    return std::abs(lhs - rhs) <= kBoundaryBand;
}

}  // namespace

RegionVerdict thresholds(const ModelParams& params) {
    if (params.alpha < 0.0 || params.beta < 0.0 || params.s < 0.0 || params.s > 1.0)
        throw std::invalid_argument("thresholds: alpha, beta >= 0 and s in [0,1] required");

    const double d = std::abs(std::sqrt(params.alpha) - std::sqrt(params.beta));
    const double s = params.s;
    const double t_single = union_exponent_threshold(s);
    const double t_pair = union_exponent_threshold(1.0 - (1.0 - s) * (1.0 - s));
    const double t_k = union_exponent_threshold(1.0 - std::pow(1.0 - s, params.k_graphs));
    const double mass = s * s * (params.alpha + params.beta) / 2.0;

    RegionVerdict v;
    v.single_graph = d > t_single;
    v.pair_union = d > t_pair;
    v.k_union = d > t_k;
    v.matching_feasible = mass > 1.0;

    // Only the comparisons that decide the region trigger the boundary
    // verdict; k_union is reported but never picks the region.
    if (near_boundary(d, t_single) || near_boundary(d, t_pair) || near_boundary(mass, 1.0)) {
        v.region = Region::BoundaryIndeterminate;
    } else if (v.single_graph) {
        v.region = Region::Green;
    } else if (v.pair_union) {
        v.region = v.matching_feasible ? Region::Cyan : Region::Yellow;
    } else {
        v.region = Region::Red;
    }
    return v;
}

double PhaseAxis::value(int idx) const {
    if (count == 1) return lo;
    return lo + (hi - lo) * idx / (count - 1);
}

namespace {

void validate_axis(const PhaseAxis& axis) {
    if (axis.name != "alpha" && axis.name != "beta" && axis.name != "s")
        throw std::invalid_argument("phase_grid: axis must be one of alpha, beta, s");
    if (axis.count < 1) throw std::invalid_argument("phase_grid: axis count must be >= 1");
    if (!(axis.lo <= axis.hi)) throw std::invalid_argument("phase_grid: axis needs lo <= hi");
    if (axis.name == "s") {
        if (axis.lo < 0.0 || axis.hi > 1.0)
            throw std::invalid_argument("phase_grid: s axis must stay within [0,1]");
    } else if (axis.lo < 0.0) {
        throw std::invalid_argument("phase_grid: rate axes must be nonnegative");
    }
}

void apply_axis(ModelParams& params, const std::string& name, double value) {
    if (name == "alpha") params.alpha = value;
    else if (name == "beta") params.beta = value;
    else params.s = value;
}

}  // namespace

PhaseGrid phase_grid(const PhaseAxis& x, const PhaseAxis& y, const ModelParams& base) {
    validate_axis(x);
    validate_axis(y);
    if (x.name == y.name) throw std::invalid_argument("phase_grid: axes must differ");

    PhaseGrid grid{x, y, base, {}};
    grid.cells.reserve(static_cast<std::size_t>(x.count) * y.count);
    for (int iy = 0; iy < y.count; ++iy) {
        for (int ix = 0; ix < x.count; ++ix) {
            // Field assignment sidesteps the probability validation in the
            // ModelParams constructor; thresholds reads only the rates.
            ModelParams p = base;
            apply_axis(p, x.name, x.value(ix));
            apply_axis(p, y.name, y.value(iy));
            grid.cells.push_back(thresholds(p));
        }
    }
    return grid;
}

void write_phase_csv(const PhaseGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "x,y,region,matching_feasible,single,pair,k_union\n";
    char buf[64];
    for (int iy = 0; iy < grid.y.count; ++iy) {
        for (int ix = 0; ix < grid.x.count; ++ix) {
            const RegionVerdict& v = grid.at(ix, iy);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g", grid.x.value(ix), grid.y.value(iy));
            out << buf << ',' << to_string(v.region) << ',' << (v.matching_feasible ? 1 : 0)
                << ',' << (v.single_graph ? 1 : 0) << ',' << (v.pair_union ? 1 : 0) << ','
                << (v.k_union ? 1 : 0) << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_phase_svg(const PhaseGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);

    const int nx = grid.x.count;
    const int ny = grid.y.count;
    const int cell = std::max(2, 800 / std::max(nx, ny));
    const int w = nx * cell;
    const int h = ny * cell;

    auto color = [](Region r) {
        switch (r) {
            case Region::Green: return "#2ca02c";
            case Region::Cyan: return "#17becf";
            case Region::Yellow: return "#ffdf00";
            case Region::Red: return "#d62728";
            case Region::BoundaryIndeterminate: return "#999999";
        }
        return "#000000";
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            // y axis points up: last row of the grid sits at the top edge
            const int px = ix * cell;
            const int py = (ny - 1 - iy) * cell;
            out << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"" << color(grid.at(ix, iy).region)
                << "\"/>\n";
        }
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

void validate_pgf(const PgfParams& params) {
    if (!(params.theta > 0.0)) throw std::invalid_argument("pgf: theta must be positive");
    if (!(params.omega > 0.0)) throw std::invalid_argument("pgf: omega must be positive");
    if (!(params.zeta > 0.0)) throw std::invalid_argument("pgf: zeta must be positive");
    if (params.lambda_pattern.empty())
        throw std::invalid_argument("pgf: lambda pattern must be nonempty");
    for (int lam : params.lambda_pattern)
        if (lam != 1 && lam != -1)
            throw std::invalid_argument("pgf: lambda entries must be +1 or -1");
}

}  // namespace

PgfTable pgf_initial(const PgfParams& params) {
    validate_pgf(params);
    const double x = params.lambda_pattern[0] > 0 ? params.omega : params.zeta;

    PgfTable t;
    t.k = 1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 0; m < 2; ++m) {
                double value = 1.0;
                if (i == 1 && j == 0 && m == 1) value = 1.0 / params.theta;
                else if (i == 1 && j == 1 && m == 0) value = params.theta * x;
                else if (i == 1 && j == 1 && m == 1) value = x;
                t.phi[static_cast<std::size_t>((i * 2 + j) * 2 + m)] = value;
            }
    return t;
}

PgfTable pgf_advance(const PgfTable& table, const PgfParams& params, int step) {
    validate_pgf(params);
    const int length = static_cast<int>(params.lambda_pattern.size());
    if (step < 2 || step > length) throw std::invalid_argument("pgf_advance: step out of range");
    if (table.k != step - 1) throw std::invalid_argument("pgf_advance: table is not at step-1");

    const bool intra = params.lambda_pattern[static_cast<std::size_t>(step - 1)] > 0;
    const std::array<double, 4> c = intra ? params.law.intra() : params.law.inter();
    const double x = intra ? params.omega : params.zeta;
    const double theta = params.theta;

    PgfTable out;
    out.k = step;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const double old0 = table.at(i, j, 0);
            const double old1 = table.at(i, j, 1);
            const double new0 = (c[0] + c[2]) * old0 + (c[1] + c[3] * theta * x) * old1;
            const double new1 = (c[0] + c[2] / theta) * old0 + (c[1] + c[3] * x) * old1;
            out.phi[static_cast<std::size_t>((i * 2 + j) * 2 + 0)] = new0;
            out.phi[static_cast<std::size_t>((i * 2 + j) * 2 + 1)] = new1;
        }
    return out;
}

double pgf_cycle(const PgfParams& params) {
    validate_pgf(params);
    const int length = static_cast<int>(params.lambda_pattern.size());
    if (length < 2) throw std::invalid_argument("pgf_cycle: cycle length must be >= 2");

    PgfTable t = pgf_initial(params);
    for (int step = 2; step <= length; ++step) t = pgf_advance(t, params, step);

    const std::array<double, 4> w =
        params.lambda_pattern[0] > 0 ? params.law.intra() : params.law.inter();
    double total = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) total += w[static_cast<std::size_t>(2 * i + j)] * t.at(i, j, j);
    return total;
}

double pgf_full(const Labeling& labels, const Permutation& pi_star, const Permutation& pi,
                const PgfParams& params) {
    const int n = labels.n();
    if (pi_star.n() != n || pi.n() != n) throw std::invalid_argument("pgf_full: size mismatch");
    if (n > 200) throw std::invalid_argument("pgf_full: n must be <= 200");
    if (!(params.theta > 0.0)) throw std::invalid_argument("pgf: theta must be positive");

    const PairCycleDecomposition dec = pair_cycles(pi_star, pi);
    double log_product = 0.0;
    for (const std::vector<VertexPair>& cycle : dec.cycles) {
        PgfParams local = params;
        local.lambda_pattern.clear();
        local.lambda_pattern.reserve(cycle.size());
        for (const VertexPair& e : cycle)
            local.lambda_pattern.push_back(labels.same_community(e.first, e.second) ? 1 : -1);
        log_product += std::log(pgf_cycle(local));
    }
    return std::exp(log_product);
}

PgfMonteCarlo pgf_cycle_monte_carlo(const PgfParams& params, std::int64_t samples,
                                    RandomStream& rng) {
    validate_pgf(params);
    const int length = static_cast<int>(params.lambda_pattern.size());
    if (length < 2) throw std::invalid_argument("pgf_cycle_monte_carlo: cycle length must be >= 2");
    if (samples < 2) throw std::invalid_argument("pgf_cycle_monte_carlo: needs >= 2 samples");

    const std::array<double, 4> intra = params.law.intra();
    const std::array<double, 4> inter = params.law.inter();

    std::vector<int> a(static_cast<std::size_t>(length));
    std::vector<int> b(static_cast<std::size_t>(length));
    double sum = 0.0;
    double sumsq = 0.0;
    for (std::int64_t it = 0; it < samples; ++it) {
        for (int k = 0; k < length; ++k) {
            const std::array<double, 4>& law =
                params.lambda_pattern[static_cast<std::size_t>(k)] > 0 ? intra : inter;
            const double u = rng.real01();
            int cell = 0;
            double acc = law[0];
            while (cell < 3 && u >= acc) acc += law[static_cast<std::size_t>(++cell)];
            a[static_cast<std::size_t>(k)] = cell >> 1;
            b[static_cast<std::size_t>(k)] = cell & 1;
        }
        int x = 0;
        int y_plus = 0;
        int y_minus = 0;
        for (int k = 0; k < length; ++k) {
            const int next = k + 1 == length ? 0 : k + 1;
            const int ab = a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(k)];
            x += ab - a[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(next)];
            if (params.lambda_pattern[static_cast<std::size_t>(k)] > 0) y_plus += ab;
            else y_minus += ab;
        }
        const double value = std::pow(params.theta, x) * std::pow(params.omega, y_plus) *
                             std::pow(params.zeta, y_minus);
        sum += value;
        sumsq += value * value;
    }

    PgfMonteCarlo out;
    const double n = static_cast<double>(samples);
    out.mean = sum / n;
    const double var = std::max(0.0, (sumsq - n * out.mean * out.mean) / (n - 1.0));
    out.se = std::sqrt(var / n);
    return out;
}

CycleBoundCheck pgf_cycle_bound_check(double alpha, double beta, double s, double n,
                                      const std::vector<int>& lambda_pattern, double eps) {
    if (n < 3.0) throw std::invalid_argument("pgf_cycle_bound_check: n too small");

    const double log_over_n = std::log(n) / n;
    EdgeJointLaw law;
    const double p = alpha * log_over_n;
    const double q = beta * log_over_n;
    if (p < 0.0 || p > 1.0 || q < 0.0 || q > 1.0)
        throw std::invalid_argument("pgf_cycle_bound_check: rates leave [0,1] at this n");
    law.p11 = s * s * p;
    law.p10 = s * (1.0 - s) * p;
    law.p01 = law.p10;
    law.p00 = 1.0 - p * (2.0 * s - s * s);
    law.q11 = s * s * q;
    law.q10 = s * (1.0 - s) * q;
    law.q01 = law.q10;
    law.q00 = 1.0 - q * (2.0 * s - s * s);

    PgfParams params;
    params.theta = 1.0 / std::sqrt(n);
    params.omega = std::exp(1.0);
    params.zeta = std::exp(1.0);
    params.law = law;
    params.lambda_pattern = lambda_pattern;

    double c_plus = 0.0;
    double c_minus = 0.0;
    for (int lam : lambda_pattern) (lam > 0 ? c_plus : c_minus) += 1.0;

    CycleBoundCheck out;
    out.value = pgf_cycle(params);
    out.bound = std::exp(-(1.0 - eps) * s * s * (alpha * c_plus + beta * c_minus) * log_over_n);
    out.holds = out.value <= out.bound;
    return out;
}

std::vector<std::string> pgf_range_warnings(const PgfParams& params) {
    std::vector<std::string> notes;
    if (params.omega < 1.0 || params.omega > 3.0)
        notes.push_back("omega outside the analyzed range [1,3]");
    if (params.zeta < 1.0 || params.zeta > 3.0)
        notes.push_back("zeta outside the analyzed range [1,3]");
    return notes;
}

}  // namespace csbm
