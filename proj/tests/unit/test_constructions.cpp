#include <catch2/catch_amalgamated.hpp>

#include "gyro/builtin.hpp"
#include "gyro/constructions.hpp"
#include "gyro/random_instances.hpp"

using namespace gyro;

TEST_CASE("base from an independent set of a Cayley graph") {
    Graph c5 = circulant(5, {1, 4});
    auto cert = base_from_independent_set(c5, {0, 2});
    CHECK(verify_base(c5, cert).valid);
    CHECK(cert.density() == Rational(2, 5));
    CHECK(cert.A == std::vector<GroupElement>{{0}, {2}});

    Graph g5 = torus_king_complement();
    auto square = base_from_independent_set(g5, {0, 1, 5, 6}); // the unit square as vertex indices
    CHECK(verify_base(g5, square).valid);
    CHECK(square.density() == Rational(4, 25));

    CHECK_THROWS_AS(base_from_independent_set(c5, {0, 1}), input_error);
    Graph plain = make_graph(5, c5.edges());
    CHECK_THROWS_AS(base_from_independent_set(plain, {0, 2}), input_error);
}

TEST_CASE("base from a circular coloring") {
    Graph c5 = circulant(5, {1, 4});
    std::vector<int> hom{0, 2, 4, 1, 3}; // C5 -> K_{5/2} winding twice
    auto cert = base_from_circular_coloring(c5, 5, 2, hom);
    CHECK(verify_base(c5, cert).valid);
    CHECK(cert.density() == Rational(2, 5));
    CHECK(cert.A == std::vector<GroupElement>{{0}, {1}});

    Graph k3 = complete_graph(3);
    auto k3cert = base_from_circular_coloring(k3, 3, 1, {0, 1, 2});
    CHECK(verify_base(k3, k3cert).valid);
    CHECK(k3cert.density() == Rational(1, 3));

    Graph k2 = complete_graph(2);
    auto k2cert = base_from_circular_coloring(k2, 2, 1, {0, 1});
    CHECK(k2cert.density() == Rational(1, 2));

    CHECK_THROWS_AS(base_from_circular_coloring(c5, 5, 2, std::vector<int>{0, 1, 2, 3, 4}), input_error);
}

TEST_CASE("lifting a base to the Cartesian square") {
    Graph g5 = torus_king_complement();
    auto cert = base_from_independent_set(g5, {0, 1, 5, 6});
    auto lifted = lift_base_to_product(g5, cert);
    CHECK(lifted.density() == Rational(4, 25));
    Graph product = cartesian(g5, g5);
    CHECK(verify_base(product, lifted).valid);

    Graph k2 = complete_graph(2);
    BaseCertificate k2cert;
    k2cert.group = AbelianGroup({2});
    k2cert.A = {{0}};
    k2cert.f = {{0}, {1}};
    auto c4cert = lift_base_to_product(k2, k2cert);
    CHECK(verify_base(cartesian(k2, k2), c4cert).valid);
    CHECK(c4cert.density() == Rational(1, 2));

    BaseCertificate broken = k2cert;
    broken.f = {{0}, {0}};
    CHECK_THROWS_AS(lift_base_to_product(k2, broken), input_error);
}

TEST_CASE("modulus expansion") {
    Graph c5 = circulant(5, {1, 4});
    auto cert = base_from_independent_set(c5, {0, 2});
    auto doubled = expand_modulus(cert, 2);
    CHECK(doubled.group.moduli == std::vector<std::int64_t>{10});
    CHECK(doubled.A.size() == 4);
    CHECK(doubled.density() == Rational(2, 5));
    CHECK(verify_base(c5, doubled).valid);

    BaseCertificate k2cert;
    k2cert.group = AbelianGroup({2});
    k2cert.A = {{0}};
    k2cert.f = {{0}, {1}};
    auto tripled = expand_modulus(k2cert, 3);
    CHECK(tripled.density() == Rational(1, 2));
    CHECK(verify_base(complete_graph(2), tripled).valid);

    auto same = expand_modulus(k2cert, 1);
    CHECK(same.A == k2cert.A);
    CHECK(same.group.moduli == k2cert.group.moduli);

    BaseCertificate square;
    square.group = AbelianGroup({5, 5});
    square.A = {{0, 0}};
    square.f = {{0, 0}};
    CHECK_THROWS_AS(expand_modulus(square, 2), input_error);
}

TEST_CASE("CRT inflation") {
    Graph k2 = complete_graph(2);
    BaseCertificate k2cert;
    k2cert.group = AbelianGroup({2});
    k2cert.A = {{0}};
    k2cert.f = {{0}, {1}};

    auto inflated = crt_inflate(k2cert, 1, {5});
    CHECK(inflated.group.moduli == std::vector<std::int64_t>{5});
    CHECK(inflated.A == std::vector<GroupElement>{{2}});
    CHECK(inflated.density() == Rational(1, 5));
    CHECK(verify_base(k2, inflated).valid);

    Graph g5 = torus_king_complement();
    auto square = base_from_independent_set(g5, {0, 1, 5, 6});
    auto big = crt_inflate(square, 1, {11, 13}); // window (10,15)
    CHECK(big.group.moduli == std::vector<std::int64_t>{143});
    CHECK(big.density() == Rational(4, 143));
    CHECK(verify_base(g5, big).valid);

    CHECK_THROWS_AS(crt_inflate(k2cert, 1, {7}), input_error);  // 7 outside (4,6)
    CHECK_THROWS_AS(crt_inflate(square, 1, {11, 11}), input_error);
    CHECK_THROWS_AS(crt_inflate(square, 1, {11}), input_error); // one prime per factor
}

TEST_CASE("characteristic-vector homomorphism into the Hamming Cayley graph") {
    auto hom52 = kneser_characteristic_hom(5, 2);
    CHECK(is_homomorphism(kneser(5, 2), hamming_cayley(5, 4), hom52));

    auto hom21 = kneser_characteristic_hom(2, 1);
    CHECK(is_homomorphism(kneser(2, 1), hamming_cayley(2, 2), hom21));

    auto hom42 = kneser_characteristic_hom(4, 2);
    CHECK(is_homomorphism(kneser(4, 2), hamming_cayley(4, 4), hom42));
}

TEST_CASE("pulled-back certificates stay valid") {
    Graph petersen = kneser(5, 2);
    Graph target = hamming_cayley(5, 4);
    auto hom = kneser_characteristic_hom(5, 2);
    auto target_cert = base_from_independent_set(target, lexmin_maximum_independent_set(target));
    auto cert = pullback_certificate(petersen, hom, target_cert);
    CHECK(verify_base(petersen, cert).valid);
    CHECK(cert.density() == target_cert.density());

    // K2 -> hamming(2,2) toy instance: density 2/4
    auto hom2 = kneser_characteristic_hom(2, 1);
    Graph target2 = hamming_cayley(2, 2);
    auto cert2 = pullback_certificate(kneser(2, 1), hom2,
                                      base_from_independent_set(target2, lexmin_maximum_independent_set(target2)));
    CHECK(verify_base(kneser(2, 1), cert2).valid);
    CHECK(cert2.density() == Rational(1, 2));
}

TEST_CASE("random certificates survive all three constructions") {
    Rng rng(909);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 15; ++trial) {
        Graph g = random_graph(rng, 2 + (int)rng.below(5), 35);
        std::int64_t N = 2 + (std::int64_t)rng.below(5);
        auto cert = random_valid_certificate(rng, g, AbelianGroup({N}));
        if (!cert) continue;
        ++tested;

        auto lifted = lift_base_to_product(g, *cert);
        CHECK(verify_base(cartesian(g, g), lifted).valid);
        CHECK(lifted.density() == cert->density());

        std::int64_t m = 2 + (std::int64_t)rng.below(3);
        auto expanded = expand_modulus(*cert, m);
        CHECK(verify_base(g, expanded).valid);
        CHECK(expanded.density() == cert->density());

        std::int64_t k = 1 + (std::int64_t)rng.below(2);
        auto primes = primes_in_window((k + 1) * N, (k + 2) * N);
        if (!primes.empty()) {
            auto inflated = crt_inflate(*cert, k, {primes[0]});
            CHECK(verify_base(g, inflated).valid);
            CHECK(inflated.density() == Rational(k * (std::int64_t)cert->A.size(), primes[0]));
        }
    }
    CHECK(tested >= 10);
}
