#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <vector>

#include "csbm/model.hpp"
#include "doctest.h"

namespace {

csbm::ModelParams raw_params(int n, double p, double q, double s, int k = 2) {
    return csbm::ModelParams(n, p, q, s, k, csbm::Scaling::RawProbability);
}

// Edge counts of g split by whether the endpoints share a community.
std::pair<std::int64_t, std::int64_t> edge_split(const csbm::Graph& g,
                                                 const csbm::Labeling& labels) {
    std::int64_t intra = 0;
    std::int64_t inter = 0;
    g.for_each_edge([&](int i, int j) {
        if (labels.same_community(i, j)) {
            ++intra;
        } else {
            ++inter;
        }
    });
    return {intra, inter};
}

// Pair counts split the same way.
std::pair<std::int64_t, std::int64_t> pair_split(const csbm::Labeling& labels) {
    const auto np = labels.plus_count();
    const auto nm = labels.n() - np;
    const std::int64_t intra = np * (np - 1) / 2 + nm * (nm - 1) / 2;
    const std::int64_t inter = np * nm;
    return {intra, inter};
}

bool is_subgraph(const csbm::Graph& sub, const csbm::Graph& super) {
    bool ok = true;
    sub.for_each_edge([&](int i, int j) {
        if (!super.has_edge(i, j)) ok = false;
    });
    return ok;
}

}  // namespace

TEST_SUITE("model") {

TEST_CASE("params validation") {
    CHECK_THROWS_AS(csbm::ModelParams(1, 0.1, 0.1, 0.5, 2, csbm::Scaling::RawProbability),
                    std::invalid_argument);
    CHECK_THROWS_AS(raw_params(10, -0.1, 0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(raw_params(10, 1.2, 0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(raw_params(10, 0.1, 0.1, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(raw_params(10, 0.1, 0.1, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(raw_params(10, 0.1, 0.1, 0.5, 1), std::invalid_argument);
    // log n / n scaling must also land inside [0, 1].
    CHECK_THROWS_AS(csbm::ModelParams(8, 40.0, 1.0, 0.5, 2, csbm::Scaling::LogOverN),
                    std::invalid_argument);

    const auto params = csbm::ModelParams(100, 2.0, 0.5, 0.8, 3, csbm::Scaling::LogOverN);
    CHECK(params.intra_p() == doctest::Approx(2.0 * std::log(100.0) / 100.0).epsilon(1e-12));
    CHECK(params.inter_q() == doctest::Approx(0.5 * std::log(100.0) / 100.0).epsilon(1e-12));
    const auto raw = raw_params(100, 0.25, 0.125, 0.8);
    CHECK(raw.intra_p() == 0.25);
    CHECK(raw.inter_q() == 0.125);
}

TEST_CASE("scaling names round trip") {
    using csbm::Scaling;
    CHECK(csbm::to_string(Scaling::LogOverN) == "log");
    CHECK(csbm::to_string(Scaling::RawProbability) == "raw");
    CHECK(csbm::scaling_from_string("log") == Scaling::LogOverN);
    CHECK(csbm::scaling_from_string("raw") == Scaling::RawProbability);
    CHECK_THROWS_AS(csbm::scaling_from_string("loglog"), std::invalid_argument);
}

TEST_CASE("labeling helpers") {
    const csbm::Labeling labels(std::vector<std::int8_t>{1, -1, 1, 1, -1});
    CHECK(labels.n() == 5);
    CHECK(labels.plus_count() == 3);
    CHECK(labels.v_plus() == std::vector<int>{0, 2, 3});
    CHECK(labels.v_minus() == std::vector<int>{1, 4});
    CHECK(labels.same_community(0, 2));
    CHECK_FALSE(labels.same_community(0, 1));

    const auto mask = labels.plus_mask(1);
    REQUIRE(mask.size() == 1);
    CHECK(mask[0] == 0b01101u);

    CHECK_THROWS_AS(csbm::Labeling(std::vector<std::int8_t>{1, 0, -1}), std::invalid_argument);
}

TEST_CASE("labeling sampler is balanced on average") {
    const auto params = raw_params(2000, 0.1, 0.1, 0.5);
    csbm::RandomStream rng(11);
    const auto labels = csbm::sample_labeling(params, rng);
    REQUIRE(labels.n() == 2000);
    for (int i = 0; i < labels.n(); ++i) {
        CHECK((labels.sigma(i) == 1 || labels.sigma(i) == -1));
    }
    // Binomial(2000, 1/2): 4 standard deviations is ~89.4.
    CHECK(std::abs(static_cast<double>(labels.plus_count()) - 1000.0) < 90.0);
}

TEST_CASE("sbm degenerate rates") {
    csbm::RandomStream rng(3);
    const auto labels = csbm::sample_labeling(raw_params(12, 0.5, 0.5, 1.0), rng);

    const auto empty = csbm::sample_sbm(raw_params(12, 0.0, 0.0, 1.0), labels, rng);
    CHECK(empty.edge_count() == 0);

    const auto full = csbm::sample_sbm(raw_params(12, 1.0, 1.0, 1.0), labels, rng);
    CHECK(full.edge_count() == 12 * 11 / 2);
}

TEST_CASE("sbm edge frequencies match the rates") {
    const auto params = raw_params(500, 0.30, 0.08, 1.0);
    csbm::RandomStream rng(17);
    const auto labels = csbm::sample_labeling(params, rng);
    const auto g = csbm::sample_sbm(params, labels, rng);

    const auto [intra_pairs, inter_pairs] = pair_split(labels);
    const auto [intra_edges, inter_edges] = edge_split(g, labels);

    const double p_hat = static_cast<double>(intra_edges) / static_cast<double>(intra_pairs);
    const double q_hat = static_cast<double>(inter_edges) / static_cast<double>(inter_pairs);
    const double p_se = std::sqrt(0.30 * 0.70 / static_cast<double>(intra_pairs));
    const double q_se = std::sqrt(0.08 * 0.92 / static_cast<double>(inter_pairs));
    CHECK(std::abs(p_hat - 0.30) < 3.5 * p_se);
    CHECK(std::abs(q_hat - 0.08) < 3.5 * q_se);
}

TEST_CASE("joint edge law quadruples") {
    const auto law = csbm::edge_joint_law(raw_params(50, 0.1, 0.04, 0.5));
    CHECK(law.p11 == doctest::Approx(0.025).epsilon(1e-12));
    CHECK(law.p10 == doctest::Approx(0.025).epsilon(1e-12));
    CHECK(law.p01 == doctest::Approx(0.025).epsilon(1e-12));
    CHECK(law.p00 == doctest::Approx(0.925).epsilon(1e-12));
    CHECK(law.q11 == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(law.q10 == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(law.q01 == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(law.q00 == doctest::Approx(0.97).epsilon(1e-12));

    // Both quadruples are probability vectors for arbitrary valid params.
    const auto other = csbm::edge_joint_law(raw_params(50, 0.37, 0.12, 0.81));
    double ps = 0.0;
    double qs = 0.0;
    for (int idx = 0; idx < 4; ++idx) {
        ps += other.intra()[idx];
        qs += other.inter()[idx];
        CHECK(other.intra()[idx] >= 0.0);
        CHECK(other.inter()[idx] >= 0.0);
    }
    CHECK(ps == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qs == doctest::Approx(1.0).epsilon(1e-12));

    // s = 1 collapses to perfectly coupled edges, s = 0 to independent-empty.
    const auto coupled = csbm::edge_joint_law(raw_params(50, 0.1, 0.04, 1.0));
    CHECK(coupled.p10 == 0.0);
    CHECK(coupled.p01 == 0.0);
    CHECK(coupled.p11 == doctest::Approx(0.1).epsilon(1e-12));
    const auto severed = csbm::edge_joint_law(raw_params(50, 0.1, 0.04, 0.0));
    CHECK(severed.p11 == 0.0);
    CHECK(severed.p00 == 1.0);
}

TEST_CASE("subsample keeps a binomial share of edges") {
    const auto parent = csbm::Graph::complete(80);  // 3160 edges
    csbm::RandomStream rng(23);
    const auto child = csbm::subsample(parent, 0.4, rng);
    CHECK(is_subgraph(child, parent));
    const double kept = static_cast<double>(child.edge_count());
    const double mean = 0.4 * 3160.0;
    const double sd = std::sqrt(3160.0 * 0.4 * 0.6);
    CHECK(std::abs(kept - mean) < 4.0 * sd);

    const auto all = csbm::subsample(parent, 1.0, rng);
    CHECK(all == parent);
    const auto none = csbm::subsample(parent, 0.0, rng);
    CHECK(none.edge_count() == 0);
}

TEST_CASE("relabel and unrelabel invert each other") {
    csbm::RandomStream rng(5);
    const auto params = raw_params(20, 0.4, 0.1, 1.0);
    const auto labels = csbm::sample_labeling(params, rng);
    const auto g = csbm::sample_sbm(params, labels, rng);
    const auto pi = csbm::Permutation::random(20, rng);

    const auto moved = csbm::relabel(g, pi);
    CHECK(csbm::unrelabel(moved, pi) == g);
    CHECK(csbm::relabel(csbm::unrelabel(g, pi), pi) == g);

    // relabel moves vertex i to pi(i): edge {i, j} lands at {pi(i), pi(j)}.
    bool placement_ok = true;
    g.for_each_edge([&](int i, int j) {
        if (!moved.has_edge(pi(i), pi(j))) placement_ok = false;
    });
    CHECK(placement_ok);
}

TEST_CASE("family construction invariants") {
    const auto params = raw_params(60, 0.5, 0.2, 0.7, 3);
    csbm::RandomStream rng(101);
    const auto fam = csbm::generate_family(params, rng);

    REQUIRE(fam.labels.n() == 60);
    REQUIRE(fam.g_prime.size() == 2);
    REQUIRE(fam.g_relabelled.size() == 2);
    REQUIRE(fam.pi_star.size() == 2);

    CHECK(is_subgraph(fam.g1, fam.parent));
    for (std::size_t k = 0; k < fam.g_prime.size(); ++k) {
        CHECK(is_subgraph(fam.g_prime[k], fam.parent));
        CHECK(fam.g_relabelled[k] == csbm::relabel(fam.g_prime[k], fam.pi_star[k]));
        CHECK(csbm::unrelabel(fam.g_relabelled[k], fam.pi_star[k]) == fam.g_prime[k]);
    }

    // s = 1 makes every child a relabeled copy of the parent itself.
    csbm::RandomStream rng2(102);
    const auto exact = csbm::generate_family(raw_params(40, 0.5, 0.2, 1.0), rng2);
    CHECK(exact.g1 == exact.parent);
    CHECK(exact.g_prime[0] == exact.parent);

    // s = 0 severs all children.
    csbm::RandomStream rng3(103);
    const auto severed = csbm::generate_family(raw_params(40, 0.5, 0.2, 0.0), rng3);
    CHECK(severed.g1.edge_count() == 0);
    CHECK(severed.g_prime[0].edge_count() == 0);
}

TEST_CASE("family generation is deterministic in the seed") {
    const auto params = raw_params(50, 0.4, 0.1, 0.6, 3);
    csbm::RandomStream a(777);
    csbm::RandomStream b(777);
    const auto fam_a = csbm::generate_family(params, a);
    const auto fam_b = csbm::generate_family(params, b);
    CHECK(fam_a.labels == fam_b.labels);
    CHECK(fam_a.parent == fam_b.parent);
    CHECK(fam_a.g1 == fam_b.g1);
    CHECK(fam_a.g_prime == fam_b.g_prime);
    CHECK(fam_a.g_relabelled == fam_b.g_relabelled);
    CHECK(fam_a.pi_star == fam_b.pi_star);

    csbm::RandomStream c(778);
    const auto fam_c = csbm::generate_family(params, c);
    CHECK(fam_a.parent != fam_c.parent);
}

TEST_CASE("first child marginal is an sbm at thinned rates") {
    // Children of SBM(n, p, q) thinned at rate s are SBM(n, ps, qs).
    const auto params = raw_params(400, 0.3, 0.06, 0.5);
    std::int64_t intra_edges = 0;
    std::int64_t inter_edges = 0;
    std::int64_t intra_pairs = 0;
    std::int64_t inter_pairs = 0;
    csbm::RandomStream rng(2024);
    for (int rep = 0; rep < 20; ++rep) {
        const auto fam = csbm::generate_family(params, rng);
        const auto [ip, op] = pair_split(fam.labels);
        const auto [ie, oe] = edge_split(fam.g1, fam.labels);
        intra_pairs += ip;
        inter_pairs += op;
        intra_edges += ie;
        inter_edges += oe;
    }
    const double p_hat = static_cast<double>(intra_edges) / static_cast<double>(intra_pairs);
    const double q_hat = static_cast<double>(inter_edges) / static_cast<double>(inter_pairs);
    const double p_se = std::sqrt(0.15 * 0.85 / static_cast<double>(intra_pairs));
    const double q_se = std::sqrt(0.03 * 0.97 / static_cast<double>(inter_pairs));
    CHECK(std::abs(p_hat - 0.15) < 3.5 * p_se);
    CHECK(std::abs(q_hat - 0.03) < 3.5 * q_se);
}

TEST_CASE("pair joint tallies against the law") {
    const auto params = raw_params(300, 0.2, 0.05, 0.5);
    csbm::RandomStream rng(99);
    const auto fam = csbm::generate_family(params, rng);
    const auto counts = csbm::tally_pair_joint(fam.g1, fam.g_prime[0], fam.labels);
    const auto [intra_pairs, inter_pairs] = pair_split(fam.labels);

    std::int64_t intra_total = 0;
    std::int64_t inter_total = 0;
    for (int idx = 0; idx < 4; ++idx) {
        intra_total += counts.intra[idx];
        inter_total += counts.inter[idx];
    }
    CHECK(intra_total == intra_pairs);
    CHECK(inter_total == inter_pairs);

    const auto law = csbm::edge_joint_law(params);
    for (int idx = 0; idx < 4; ++idx) {
        const double pr = law.intra()[idx];
        const double expect = pr * static_cast<double>(intra_pairs);
        const double sd = std::sqrt(static_cast<double>(intra_pairs) * pr * (1.0 - pr));
        CHECK(std::abs(static_cast<double>(counts.intra[idx]) - expect) < 4.0 * sd);
    }

    // A graph tallied against itself has empty mixed cells.
    const auto self = csbm::tally_pair_joint(fam.g1, fam.g1, fam.labels);
    CHECK(self.intra[1] == 0);
    CHECK(self.intra[2] == 0);
    CHECK(self.inter[1] == 0);
    CHECK(self.inter[2] == 0);
}

TEST_CASE("overlay through the true permutations is the parent-side union") {
    const auto params = raw_params(80, 0.4, 0.1, 0.6, 3);
    csbm::RandomStream rng(404);
    const auto fam = csbm::generate_family(params, rng);

    const auto overlay = csbm::overlay_by_permutations(
        fam.g1, {{&fam.g_relabelled[0], &fam.pi_star[0]}, {&fam.g_relabelled[1], &fam.pi_star[1]}});
    auto expected = csbm::union_graph(fam.g1, fam.g_prime[0]);
    expected = csbm::union_graph(expected, fam.g_prime[1]);
    CHECK(overlay == expected);

    // Overlay with no partners is just g1.
    CHECK(csbm::overlay_by_permutations(fam.g1, {}) == fam.g1);
}

TEST_CASE("split pattern probabilities") {
    // Two children at s = 1/2: the three nonzero patterns are equally likely.
    CHECK(csbm::split_pattern_probability(0.5, 2, 0b01) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(csbm::split_pattern_probability(0.5, 2, 0b10) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(csbm::split_pattern_probability(0.5, 2, 0b11) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // Three children at s = 1/2: the all-ones pattern has mass 1/7.
    CHECK(csbm::split_pattern_probability(0.5, 3, 0b111) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));

    for (const auto [s, k] : {std::pair{0.3, 4}, std::pair{0.5, 3}, std::pair{0.9, 2}}) {
        double total = 0.0;
        for (unsigned x = 1; x < (1u << k); ++x) {
            total += csbm::split_pattern_probability(s, k, x);
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(csbm::split_pattern_probability(0.0, 2, 0b01), std::invalid_argument);
    CHECK_THROWS_AS(csbm::split_pattern_probability(0.5, 2, 0), std::invalid_argument);
}

TEST_CASE("union splitters scatter edges at the pattern law") {
    const auto h = csbm::Graph::complete(70);  // 2415 edges
    const double s = 0.6;
    csbm::RandomStream rng(31);
    const auto [a, b] = csbm::split_union_pair(h, s, rng);

    // Every edge of h lands in at least one side, and nowhere else.
    CHECK(csbm::union_graph(a, b) == h);

    const double total = static_cast<double>(h.edge_count());
    const auto both = csbm::intersection_graph(a, b).edge_count();
    const double r_both = csbm::split_pattern_probability(s, 2, 0b11);
    const double sd = std::sqrt(total * r_both * (1.0 - r_both));
    CHECK(std::abs(static_cast<double>(both) - r_both * total) < 4.0 * sd);

    // K-way splitter: the union identity and per-slot frequencies.
    const auto parts = csbm::split_union_k(h, s, 3, rng);
    REQUIRE(parts.size() == 3);
    auto cover = csbm::union_graph(parts[0], parts[1]);
    cover = csbm::union_graph(cover, parts[2]);
    CHECK(cover == h);
    const double marginal = s / (1.0 - std::pow(1.0 - s, 3));
    for (const auto& part : parts) {
        const double sd_slot = std::sqrt(total * marginal * (1.0 - marginal));
        CHECK(std::abs(static_cast<double>(part.edge_count()) - marginal * total) < 4.0 * sd_slot);
    }

    csbm::RandomStream bad(1);
    CHECK_THROWS_AS(csbm::split_union_pair(h, 0.0, bad), std::invalid_argument);
}

TEST_CASE("family export and import round trip") {
    const auto params = raw_params(30, 0.4, 0.1, 0.7, 3);
    csbm::RandomStream rng(555);
    const auto fam = csbm::generate_family(params, rng);

    const std::string dir = "model_roundtrip_tmp";
    std::filesystem::create_directory(dir);
    csbm::export_family(fam, dir);
    const auto back = csbm::import_family(dir, params);
    std::filesystem::remove_all(dir);

    CHECK(back.labels == fam.labels);
    CHECK(back.parent == fam.parent);
    CHECK(back.g1 == fam.g1);
    CHECK(back.g_prime == fam.g_prime);
    CHECK(back.g_relabelled == fam.g_relabelled);
    CHECK(back.pi_star == fam.pi_star);
}

}  // TEST_SUITE
