#include <catch2/catch_amalgamated.hpp>

#include "gyro/graph.hpp"
#include "gyro/homomorphism.hpp"
#include "gyro/random_instances.hpp"
#include "oracles.hpp"

using namespace gyro;

TEST_CASE("homomorphism search on the named instances") {
    Graph petersen = kneser(5, 2);

    auto to_k3 = find_homomorphism(petersen, complete_graph(3));
    REQUIRE(to_k3.has_value());
    // independent edge-preservation check
    for (auto [u, v] : petersen.edges()) {
        CHECK((*to_k3)[u] != (*to_k3)[v]);
    }

    auto c5_to_k2 = find_homomorphism(circulant(5, {1, 4}), complete_graph(2));
    CHECK_FALSE(c5_to_k2.has_value());

    auto kneser_to_cube = find_homomorphism(petersen, hamming_cayley(5, 4));
    REQUIRE(kneser_to_cube.has_value());
    CHECK(is_homomorphism(petersen, hamming_cayley(5, 4), *kneser_to_cube));
}

TEST_CASE("homomorphism search is deterministic") {
    Graph g = kneser(5, 2);
    auto a = find_homomorphism(g, complete_graph(3));
    auto b = find_homomorphism(g, complete_graph(3));
    REQUIRE(a.has_value());
    CHECK(*a == *b);
}

TEST_CASE("homomorphism existence agrees with brute force on a random corpus") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(rng, 2 + (int)rng.below(5), 50);
        Graph h = random_graph(rng, 2 + (int)rng.below(4), 60);
        bool found = find_homomorphism(g, h).has_value();
        CHECK(found == oracle::brute_homomorphism_exists(g, h));
    }
}

TEST_CASE("budgeted homomorphism search reports exhaustion") {
    Graph g = kneser(5, 2);
    Budget tiny(3);
    CHECK_THROWS_AS(detail::find_homomorphism_impl(g, complete_graph(3), {false, &tiny}), budget_error);
}
