#pragma once

#include <vector>

#include "gyro/continuous.hpp"
#include "gyro/graph.hpp"
#include "gyro/rational.hpp"
#include "gyro/simplex.hpp"

namespace gyro {

inline Graph k2_c5_lexicographic() { return lexicographic(complete_graph(2), circulant(5, {1, 4})); }

inline Graph k5_union_k2c5() { return disjoint_union(complete_graph(5), k2_c5_lexicographic()); }

/// Complement of the 5x5 toroidal king graph: the Cayley graph on Z_5^2 whose
/// connection set is everything outside {-1,0,1}^2.  Its only maximum
/// independent sets are the 25 translates of the unit square.
inline Graph torus_king_complement() {
    AbelianGroup Z({5, 5});
    std::vector<GroupElement> S;
    auto small = [](std::int64_t r) { return r == 0 || r == 1 || r == 4; };
    for (std::int64_t idx = 1; idx < Z.order; ++idx) {
        GroupElement e = Z.element_at(idx);
        if (!(small(e[0]) && small(e[1]))) S.push_back(e);
    }
    return cayley(Z, ConnectionSet(Z, S), "king-complement:5x5");
}

/// Built-in 40/7-gyrocoloring of K5 u K2[C5].
///
/// Base set [0,1/2) u [15/14,22/14); the five K5 vertices get the shifts
/// 0, 1/2, 29/14, 36/14, 58/14, and the two C5 copies get 8i/7 resp. (8i+4)/7
/// where cycle position p receives index i = 3p mod 5 (cycle-adjacent shifts
/// then differ by 24/7 mod 40/7, which translates the base off itself; the
/// naive i = p assignment differs by 8/7 and collides).
inline ContinuousGyrocoloring gyrocoloring_40_7() {
    Rational z(40, 7);
    std::vector<std::pair<Rational, Rational>> base{{Rational(0), Rational(1, 2)},
                                                    {Rational(15, 14), Rational(22, 14)}};
    std::vector<Rational> shifts{Rational(0), Rational(1, 2), Rational(29, 14), Rational(36, 14), Rational(58, 14)};
    for (int copy = 0; copy < 2; ++copy)
        for (int p = 0; p < 5; ++p) {
            int i = (3 * p) % 5;
            shifts.push_back(copy == 0 ? Rational(8 * i, 7) : Rational(8 * i + 4, 7));
        }
    return make_gyrocoloring(z, std::move(base), std::move(shifts));
}

struct IncidenceCheck {
    BigInt determinant;
    bool invertible;
};

/// Exact determinant of the 25x25 0/1 matrix pairing each vertex of Z_5^2
/// with the translates of the unit square {0,(0,1),(1,0),(1,1)}: entry
/// ((i,j),(i',j')) is 1 iff (i,j) lies in the square anchored at (i',j').
/// Invertibility pins down the weights of any optimal-density base of the
/// king-complement graph.
inline IncidenceCheck square_translate_incidence_check() {
    AbelianGroup Z({5, 5});
    const std::vector<GroupElement> square{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    std::vector<std::vector<BigInt>> M(25, std::vector<BigInt>(25, 0));
    for (std::int64_t anchor = 0; anchor < 25; ++anchor) {
        GroupElement w = Z.element_at(anchor);
        for (const auto& d : square) M[Z.index_of(Z.add(w, d))][anchor] = 1;
    }
    BigInt det = exact_determinant(M);
    return {det, det != 0};
}

} // namespace gyro
