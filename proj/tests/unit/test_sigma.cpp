#include <catch2/catch_amalgamated.hpp>

#include "gyro/builtin.hpp"
#include "gyro/fractional.hpp"
#include "gyro/random_instances.hpp"
#include "gyro/sigma.hpp"
#include "oracles.hpp"

using namespace gyro;

namespace {
/// Independent oracle for sigma_Z(G): try every symmetric subset S directly
/// (no canonicalization, no filters) and take the best alpha(C(Z,S))/|Z| over
/// those admitting a homomorphism from G.
Rational brute_sigma(const Graph& G, const AbelianGroup& Z) {
    if (G.edge_count() == 0) return Rational(1);
    std::vector<std::int64_t> neg(Z.order);
    for (std::int64_t i = 0; i < Z.order; ++i) neg[i] = Z.index_of(Z.neg(Z.element_at(i)));
    std::vector<std::int64_t> reps;
    for (std::int64_t i = 1; i < Z.order; ++i)
        if (neg[i] >= i) reps.push_back(i);

    Rational best(0);
    for (std::uint64_t mask = 1; mask < (1ull << reps.size()); ++mask) {
        std::vector<std::int64_t> idx;
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (mask >> c & 1) {
                idx.push_back(reps[c]);
                if (neg[reps[c]] != reps[c]) idx.push_back(neg[reps[c]]);
            }
        Graph H = cayley(Z, ConnectionSet::from_indices(Z, idx));
        if (!oracle::brute_homomorphism_exists(G, H)) continue;
        Rational density(oracle::brute_alpha(H), Z.order);
        best = std::max(best, density);
    }
    return best;
}
} // namespace

TEST_CASE("sigma on the worked instances") {
    Graph c5 = circulant(5, {1, 4});

    auto z5 = sigma_group_exact(c5, AbelianGroup({5}));
    CHECK(z5.density == Rational(2, 5));
    CHECK(z5.exact);
    REQUIRE(z5.certificate.has_value());
    CHECK(verify_base(c5, *z5.certificate).valid);

    auto z3 = sigma_group_exact(c5, AbelianGroup({3}));
    CHECK(z3.density == Rational(1, 3)); // only symmetric choice is all of Z_3 minus 0

    auto k2 = sigma_group_exact(complete_graph(2), AbelianGroup({2}));
    CHECK(k2.density == Rational(1, 2));

    // no proper map exists when the group is smaller than the chromatic number
    auto impossible = sigma_group_exact(complete_graph(5), AbelianGroup({3}));
    CHECK(impossible.density == 0);
    CHECK_FALSE(impossible.certificate.has_value());
    CHECK(impossible.exact);
}

TEST_CASE("sigma of the king-complement graph over Z_5^2 equals 4/25") {
    Graph g5 = torus_king_complement();
    auto res = sigma_group_exact(g5, AbelianGroup({5, 5}));
    CHECK(res.density == Rational(4, 25));
    CHECK(res.exact);
    REQUIRE(res.certificate.has_value());
    CHECK(verify_base(g5, *res.certificate).valid);
    CHECK(res.certificate->A.size() == 4);
}

TEST_CASE("edgeless graphs have density one") {
    Graph e3 = complement(complete_graph(3));
    auto res = sigma_group_exact(e3, AbelianGroup({4}));
    CHECK(res.density == 1);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->A.size() == 4);
}

TEST_CASE("circulant graphs: sigma over their own group is alpha/N") {
    Rng rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        std::int64_t N = 3 + (std::int64_t)rng.below(11);
        AbelianGroup Z({N});
        Graph g = cayley(Z, random_connection_set(rng, Z));
        auto res = sigma_group_exact(g, Z);
        CHECK(res.exact);
        CHECK(res.density == Rational(independence_number(g).alpha, N));
        REQUIRE(res.certificate.has_value());
        CHECK(verify_base(g, *res.certificate).valid);
    }
}

TEST_CASE("sigma agrees with the unfiltered brute-force oracle") {
    Rng rng(5150);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_graph(rng, 2 + (int)rng.below(4), 40 + (int)rng.below(40));
        AbelianGroup Z({(std::int64_t)(2 + rng.below(6))});
        auto res = sigma_group_exact(g, Z);
        CHECK(res.exact);
        CHECK(res.density == brute_sigma(g, Z));
        if (res.certificate) CHECK(verify_base(g, *res.certificate).valid);
    }
    // one two-factor group
    Graph g = random_graph(rng, 4, 50);
    AbelianGroup Z({2, 3});
    auto res = sigma_group_exact(g, Z);
    CHECK(res.density == brute_sigma(g, Z));
}

TEST_CASE("sigma value is invariant under graph relabeling") {
    Rng rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = random_graph(rng, 6, 50);
        std::vector<int> perm{5, 2, 0, 4, 1, 3};
        AbelianGroup Z({(std::int64_t)(3 + rng.below(6))});
        CHECK(sigma_group_exact(g, Z).density == sigma_group_exact(relabel(g, perm), Z).density);
    }
}

TEST_CASE("sigma is independent of the worker count") {
    Graph g5 = torus_king_complement();
    auto seq = sigma_group_exact(g5, AbelianGroup({7}), 50'000'000, 1);
    auto par = sigma_group_exact(g5, AbelianGroup({7}), 50'000'000, 4);
    CHECK(seq.density == par.density);
    CHECK(seq.exact == par.exact);
    if (seq.certificate) {
        REQUIRE(par.certificate.has_value());
        CHECK(seq.certificate->A == par.certificate->A);
        CHECK(seq.certificate->f == par.certificate->f);
    }
}

TEST_CASE("budget exhaustion downgrades to an inexact lower bound") {
    Graph g5 = torus_king_complement();
    auto res = sigma_group_exact(g5, AbelianGroup({7}), 50);
    CHECK_FALSE(res.exact);
    // self-seeding is unavailable over Z_7, so nothing was proven
    CHECK(res.density == 0);
}

TEST_CASE("gyro upper bound on the worked instances") {
    Graph c5 = circulant(5, {1, 4});
    auto up = gyro_upper_bound(c5, 5);
    CHECK(up.bound == Rational(5, 2));
    CHECK(verify_base(c5, up.certificate).valid);

    Graph h = k2_c5_lexicographic();
    auto uph = gyro_upper_bound(h, 10);
    CHECK(uph.bound == 5); // alpha(C(10,S)) = 2 over Z_10
    CHECK(verify_base(h, uph.certificate).valid);
}

TEST_CASE("gyro upper bound accepts seed certificates") {
    Graph g = k5_union_k2c5();
    auto seed = discretize(gyrocoloring_40_7(), g.label);
    auto up = gyro_upper_bound(g, 4, {}, 50'000'000, {seed});
    CHECK(up.bound <= Rational(40, 7));
    CHECK(verify_base(g, up.certificate).valid);
}

TEST_CASE("gyro lower bound provenance") {
    Graph lp = line_graph(kneser(5, 2));
    auto low = gyro_lower_bound(lp);
    CHECK(low.bound == Rational(45, 14)); // (15/14) * 3 beats chi_f = 3
    CHECK(low.provenance == "clique-lemma");

    Graph c5 = circulant(5, {1, 4});
    auto lowc5 = gyro_lower_bound(c5);
    CHECK(lowc5.bound == Rational(5, 2));
    CHECK(lowc5.provenance == "fractional");

    Graph un = k5_union_k2c5();
    auto lowun = gyro_lower_bound(un, true);
    CHECK(lowun.bound == Rational(50, 9));
    CHECK(lowun.provenance == "product-trick");
}

TEST_CASE("bounds are consistent on a random corpus") {
    Rng rng(2718);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(rng, 2 + (int)rng.below(6), 20 + (int)rng.below(60));
        auto chi_f = fractional_chromatic(g).value;
        auto low = gyro_lower_bound(g);
        auto up = gyro_upper_bound(g, 8);
        auto chi_c = circular_chromatic(g).value;
        CHECK(chi_f <= low.bound);
        CHECK(low.bound <= up.bound);
        CHECK(up.bound <= chi_c);
    }
}
