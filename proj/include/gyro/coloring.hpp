#pragma once

#include <numeric>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/graph.hpp"
#include "gyro/homomorphism.hpp"
#include "gyro/independent_sets.hpp"
#include "gyro/rational.hpp"

namespace gyro {

struct ChromaticResult {
    int chi;
    std::vector<int> coloring;
};

/// max(clique number, ceil(n/alpha)); both are valid chromatic lower bounds.
inline int chromatic_lower_bound(const Graph& G, Budget* budget = nullptr) {
    int omega = clique_number(G, budget);
    int alpha = independence_number(G, budget).alpha;
    int ratio = (int)((G.n + alpha - 1) / alpha);
    return std::max(omega, ratio);
}

/// Exact chromatic number via homomorphisms into complete graphs, scanning k
/// from the clique/ratio lower bound up to the greedy upper bound.
inline ChromaticResult chromatic_number(const Graph& G, Budget* budget = nullptr) {
    if (G.edge_count() == 0) return {1, std::vector<int>(G.n, 0)};
    int lo = std::max(2, chromatic_lower_bound(G, budget));
    auto [hi, greedy] = greedy_coloring(G);
    for (int k = lo; k < hi; ++k) {
        auto f = detail::find_homomorphism_impl(G, complete_graph(k), {false, budget});
        if (f) {
            if (!is_homomorphism(G, complete_graph(k), *f)) throw std::logic_error("invalid coloring produced");
            return {k, *f};
        }
    }
    return {hi, greedy};
}

struct CircularResult {
    Rational value;
    int p, q;
    std::vector<int> hom; // homomorphism into circular_clique(p, q)
};

/// Exact circular chromatic number.
///
/// The minimum is attained at a reduced fraction p/q with p <= n.  Since
/// chi - 1 < chi_c <= chi, only reduced fractions in that window need homomorphism
/// tests; they are tried in ascending value order and the first target
/// admitting a homomorphism wins.  Edgeless graphs return 1 by convention.
inline CircularResult circular_chromatic(const Graph& G, Budget* budget = nullptr) {
    if (G.edge_count() == 0) return {Rational(1), 1, 1, std::vector<int>(G.n, 0)};
    auto chrom = chromatic_number(G, budget);
    const int chi = chrom.chi;

    std::vector<std::pair<int, int>> fractions;
    for (int q = 1; 2 * q <= G.n; ++q)
        for (int p = 2 * q; p <= G.n; ++p) {
            if (std::gcd(p, q) != 1) continue;
            // chi-1 < p/q <= chi
            if ((std::int64_t)p <= (std::int64_t)(chi - 1) * q) continue;
            if ((std::int64_t)p > (std::int64_t)chi * q) continue;
            fractions.emplace_back(p, q);
        }
    std::sort(fractions.begin(), fractions.end(),
              [](auto a, auto b) { return (std::int64_t)a.first * b.second < (std::int64_t)b.first * a.second; });

    for (auto [p, q] : fractions) {
        Graph H = circular_clique(p, q);
        auto f = detail::find_homomorphism_impl(G, H, {false, budget});
        if (f) {
            if (!is_homomorphism(G, H, *f)) throw std::logic_error("invalid circular coloring produced");
            return {Rational(p, q), p, q, *f};
        }
    }
    // K_chi is always among the candidates and chi-colorability is established
    throw std::logic_error("circular chromatic search exhausted all candidates");
}

} // namespace gyro
