#include <catch2/catch_amalgamated.hpp>

#include "gyro/builtin.hpp"
#include "gyro/constructions.hpp"
#include "gyro/continuous.hpp"
#include "gyro/random_instances.hpp"

using namespace gyro;

TEST_CASE("discretization of the built-in 40/7 gyrocoloring") {
    auto c = gyrocoloring_40_7();
    CHECK(c.z == Rational(40, 7));
    CHECK(c.base_length() == 1);

    auto cert = discretize(c);
    CHECK(cert.group.moduli == std::vector<std::int64_t>{80});
    CHECK(cert.A.size() == 14);
    CHECK(cert.density() == Rational(7, 40));
}

TEST_CASE("the built-in gyrocoloring is valid for K5 u K2[C5]") {
    Graph g = k5_union_k2c5();
    auto c = gyrocoloring_40_7();
    CHECK(verify_gyrocoloring(g, c).valid);

    // the alternative cycle assignment p -> 2p also validates
    auto alt = c;
    for (int copy = 0; copy < 2; ++copy)
        for (int p = 0; p < 5; ++p) {
            int i = (2 * p) % 5;
            alt.shifts[5 + 5 * copy + p] = copy == 0 ? Rational(8 * i, 7) : Rational(8 * i + 4, 7);
        }
    CHECK(verify_gyrocoloring(g, alt).valid);

    // the naive identity assignment collides on cycle edges
    auto naive = c;
    for (int copy = 0; copy < 2; ++copy)
        for (int p = 0; p < 5; ++p)
            naive.shifts[5 + 5 * copy + p] = copy == 0 ? Rational(8 * p, 7) : Rational(8 * p + 4, 7);
    auto v = verify_gyrocoloring(g, naive);
    CHECK_FALSE(v.valid);
    REQUIRE(v.violation.has_value());

    // tampering with a K5 shift creates a clique collision
    auto tampered = c;
    tampered.shifts[1] = tampered.shifts[0];
    auto vt = verify_gyrocoloring(g, tampered);
    CHECK_FALSE(vt.valid);
    REQUIRE(vt.violation.has_value());
    CHECK(vt.violation->u == 0);
    CHECK(vt.violation->v == 1);
}

TEST_CASE("discretize rejects bases whose total length is not one") {
    auto half = make_gyrocoloring(Rational(2), {{Rational(0), Rational(1, 2)}}, {Rational(0), Rational(1)});
    CHECK_THROWS_AS(discretize(half), input_error);
}

TEST_CASE("interval normalization") {
    auto c = make_gyrocoloring(Rational(3), {{Rational(1, 2), Rational(1)}, {Rational(0), Rational(1, 2)}},
                               {Rational(0)});
    REQUIRE(c.base.size() == 1); // adjacent halves merged
    CHECK(c.base[0] == std::pair<Rational, Rational>{Rational(0), Rational(1)});

    CHECK_THROWS_AS(make_gyrocoloring(Rational(2), {{Rational(0), Rational(1)}, {Rational(1, 2), Rational(3, 2)}},
                                      {Rational(0)}),
                    input_error); // overlap
    CHECK_THROWS_AS(make_gyrocoloring(Rational(2), {{Rational(0), Rational(5, 2)}}, {Rational(0)}), input_error);
}

TEST_CASE("arc discretization matches the circular-coloring base") {
    // C5 with the 5/2 circular coloring: base [0,1), shifts j*(z/5)*2... built
    // directly as a gyrocoloring with arcs
    Graph c5 = circulant(5, {1, 4});
    std::vector<int> hom{0, 2, 4, 1, 3};
    std::vector<Rational> shifts;
    for (int v = 0; v < 5; ++v) shifts.push_back(Rational(hom[v], 2)); // x * z/p with z=5/2, p=5
    auto c = make_gyrocoloring(Rational(5, 2), {{Rational(0), Rational(1)}}, shifts);
    CHECK(verify_gyrocoloring(c5, c).valid);
    auto cert = discretize(c, c5.label);
    CHECK(cert.group.moduli == std::vector<std::int64_t>{5});
    CHECK(cert.A == std::vector<GroupElement>{{0}, {1}});
    auto direct = base_from_circular_coloring(c5, 5, 2, hom);
    CHECK(cert.A == direct.A);
    CHECK(cert.f == direct.f);
}

TEST_CASE("continuous_from_base round trip") {
    Graph k2 = complete_graph(2);
    BaseCertificate cert;
    cert.group = AbelianGroup({2});
    cert.A = {{0}};
    cert.f = {{0}, {1}};
    auto c = continuous_from_base(cert);
    CHECK(c.z == 2);
    REQUIRE(c.base.size() == 1);
    CHECK(c.base[0] == std::pair<Rational, Rational>{Rational(0), Rational(1)});
    CHECK(c.shifts == std::vector<Rational>{Rational(0), Rational(1)});

    auto back = discretize(c);
    CHECK(back.group.moduli == cert.group.moduli);
    CHECK(back.A == cert.A);
    CHECK(back.f == cert.f);

    // multi-factor groups are rejected
    BaseCertificate square;
    square.group = AbelianGroup({5, 5});
    square.A = {{0, 0}};
    square.f = {{0, 0}};
    CHECK_THROWS_AS(continuous_from_base(square), input_error);
}

TEST_CASE("discretize after continuous_from_base preserves density and validity") {
    Rng rng(31);
    int tested = 0;
    for (int trial = 0; trial < 40 && tested < 12; ++trial) {
        Graph g = random_graph(rng, 2 + (int)rng.below(4), 40);
        std::int64_t N = 2 + (std::int64_t)rng.below(7);
        auto cert = random_valid_certificate(rng, g, AbelianGroup({N}));
        if (!cert) continue;
        ++tested;
        auto c = continuous_from_base(*cert);
        CHECK(c.base_length() == 1);
        auto back = discretize(c, g.label);
        CHECK(back.density() == cert->density());
        CHECK(Rational(1) / c.z == cert->density());
        CHECK(verify_base(g, back).valid);
        // the grid may coarsen when intervals merge; it always divides N
        std::int64_t L = back.group.moduli[0];
        CHECK(N % L == 0);
        auto re_expanded = expand_modulus(back, N / L);
        CHECK(verify_base(g, re_expanded).valid);
        CHECK(re_expanded.density() == cert->density());
    }
    CHECK(tested >= 8);
}

TEST_CASE("square-translate incidence matrix is invertible") {
    auto check = square_translate_incidence_check();
    CHECK(check.invertible);
    CHECK(check.determinant == 1024); // frozen from an independent exact computation
}
