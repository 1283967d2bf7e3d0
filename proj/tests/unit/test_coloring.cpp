#include <catch2/catch_amalgamated.hpp>

#include "gyro/builtin.hpp"
#include "gyro/coloring.hpp"
#include "gyro/fractional.hpp"
#include "gyro/random_instances.hpp"

using namespace gyro;

TEST_CASE("chromatic number of the worked instances") {
    auto h = chromatic_number(k2_c5_lexicographic());
    CHECK(h.chi == 6);
    for (auto [u, v] : k2_c5_lexicographic().edges()) CHECK(h.coloring[u] != h.coloring[v]);

    CHECK(chromatic_number(line_graph(kneser(5, 2))).chi == 4);
    CHECK(chromatic_number(circulant(5, {1, 4})).chi == 3);
    CHECK(chromatic_number(kneser(5, 2)).chi == 3); // n - 2k + 2
    CHECK(chromatic_number(complete_graph(7)).chi == 7);
    CHECK(chromatic_number(complement(complete_graph(5))).chi == 1);
    CHECK(chromatic_number(complete_graph(1)).chi == 1);
}

TEST_CASE("circular chromatic number of the worked instances") {
    auto c5 = circular_chromatic(circulant(5, {1, 4}));
    CHECK(c5.value == Rational(5, 2));
    CHECK(c5.p == 5);
    CHECK(c5.q == 2);
    CHECK(is_homomorphism(circulant(5, {1, 4}), circular_clique(5, 2), c5.hom));

    auto h = circular_chromatic(k2_c5_lexicographic());
    CHECK(h.value == 6); // chi_c = chi here

    auto petersen = circular_chromatic(kneser(5, 2));
    CHECK(petersen.value == 3);

    CHECK(circular_chromatic(circular_clique(7, 3)).value == Rational(7, 3));
    CHECK(circular_chromatic(complement(complete_graph(3))).value == 1);
}

TEST_CASE("sandwich inequalities and the ceiling identity on a random corpus") {
    Rng rng(31337);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 2 + (int)rng.below(8), 15 + (int)rng.below(70));
        auto chi_f = fractional_chromatic(g).value;
        auto chi_c = circular_chromatic(g);
        auto chi = chromatic_number(g);

        CHECK(Rational(g.n, independence_number(g).alpha) <= chi_f);
        CHECK(chi_f <= chi_c.value);
        CHECK(chi_c.value <= chi.chi);
        if (g.edge_count() > 0) {
            CHECK(rat_ceil(chi_c.value) == chi.chi);
            CHECK(chi_c.value > chi.chi - 1);
            CHECK(is_homomorphism(g, circular_clique(chi_c.p, chi_c.q), chi_c.hom));
        }
    }
}

TEST_CASE("circular chromatic number is invariant under relabeling") {
    Rng rng(8);
    Graph g = random_graph(rng, 7, 45);
    std::vector<int> perm{3, 1, 6, 0, 5, 2, 4};
    CHECK(circular_chromatic(g).value == circular_chromatic(relabel(g, perm)).value);
}
