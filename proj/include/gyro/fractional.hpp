#pragma once

#include <string>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/graph.hpp"
#include "gyro/independent_sets.hpp"
#include "gyro/rational.hpp"
#include "gyro/simplex.hpp"

namespace gyro {

/// Optimality certificate for the fractional chromatic number.
///
/// primal: weights on independent sets covering every vertex with total >= 1,
/// summing to `value`.  dual: vertex weights with total <= 1 on every
/// independent set, also summing to `value`.  Exact equality of the two
/// totals certifies optimality.
struct FractionalWitness {
    Rational value;
    std::vector<std::vector<int>> primal_sets;
    std::vector<Rational> primal_weights;
    std::vector<Rational> dual; // per vertex
    std::string method;         // "lp" or "vertex-transitive"
};

/// Feasibility + matching-totals check.  `complete_dual_check` additionally
/// re-enumerates all maximal independent sets to validate the dual side
/// (otherwise only the witness's own primal sets are checked against it).
inline bool verify_fractional_witness(const Graph& G, const FractionalWitness& w, bool complete_dual_check = false,
                                      std::uint64_t column_cap = 200000) {
    std::vector<Rational> cover(G.n, Rational(0));
    Rational primal_total(0);
    if (w.primal_sets.size() != w.primal_weights.size()) return false;
    for (std::size_t i = 0; i < w.primal_sets.size(); ++i) {
        if (w.primal_weights[i] < 0) return false;
        if (!is_independent_set(G, w.primal_sets[i])) return false;
        for (int v : w.primal_sets[i]) cover[v] += w.primal_weights[i];
        primal_total += w.primal_weights[i];
    }
    for (int v = 0; v < G.n; ++v)
        if (cover[v] < 1) return false;
    if (primal_total != w.value) return false;

    Rational dual_total(0);
    if ((int)w.dual.size() != G.n) return false;
    for (const auto& y : w.dual) {
        if (y < 0) return false;
        dual_total += y;
    }
    if (dual_total != w.value) return false;

    const auto& sets = complete_dual_check ? enumerate_maximal_independent_sets(G, column_cap) : w.primal_sets;
    for (const auto& s : sets) {
        Rational t(0);
        for (int v : s) t += w.dual[v];
        if (t > 1) return false;
    }
    return true;
}

namespace detail {

/// n/alpha shortcut for vertex-transitive graphs: the collection of all
/// maximum independent sets covers every vertex equally often (automorphisms
/// act transitively on vertices and permute that collection), so uniform
/// weights give a feasible primal of total n/alpha, matching the dual that
/// puts 1/alpha on every vertex.
inline std::optional<FractionalWitness> fractional_vt_shortcut(const Graph& G) {
    auto ind = independence_number(G);
    std::int64_t alpha = ind.alpha;
    auto sets = enumerate_maximum_independent_sets(G);
    std::int64_t cnt = (std::int64_t)sets.size();
    if (cnt == 0) return std::nullopt;
    if ((cnt * alpha) % G.n != 0) return std::nullopt;
    std::int64_t per_vertex = cnt * alpha / G.n;
    std::vector<std::int64_t> cover(G.n, 0);
    for (const auto& s : sets)
        for (int v : s) ++cover[v];
    for (int v = 0; v < G.n; ++v)
        if (cover[v] != per_vertex) return std::nullopt; // vt flag lied; fall back to the LP

    FractionalWitness w;
    w.value = Rational(G.n, alpha);
    w.primal_sets = std::move(sets);
    w.primal_weights.assign(cnt, Rational(G.n, alpha * cnt));
    w.dual.assign(G.n, Rational(1, alpha));
    w.method = "vertex-transitive";
    return w;
}

} // namespace detail

/// Exact fractional chromatic number with a primal/dual certificate.
///
/// Vertex-transitive graphs take the verified n/alpha shortcut; everything
/// else solves the covering LP over all maximal independent sets with exact
/// rational simplex (the packing dual is solved; its constraint duals are the
/// covering weights).
inline FractionalWitness fractional_chromatic(const Graph& G, std::uint64_t column_cap = 200000,
                                              Budget* budget = nullptr) {
    if (G.edge_count() == 0) {
        // every vertex gets the whole interval
        FractionalWitness w;
        w.value = 1;
        std::vector<int> all(G.n);
        for (int v = 0; v < G.n; ++v) all[v] = v;
        w.primal_sets = {all};
        w.primal_weights = {Rational(1)};
        w.dual.assign(G.n, Rational(0));
        w.dual[0] = 1;
        w.method = "edgeless";
        return w;
    }

    if (G.vt) {
        auto w = detail::fractional_vt_shortcut(G);
        if (w) return *w;
    }

    auto sets = enumerate_maximal_independent_sets(G, column_cap);
    const int m = (int)sets.size();
    const int n = G.n;

    // packing LP: max sum y_v  s.t.  sum_{v in J} y_v <= 1 for each maximal
    // independent set J, y >= 0
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int v : sets[i]) A[i][v] = 1;
    std::vector<Rational> b(m, Rational(1)), c(n, Rational(1));
    auto lp = simplex_max(A, b, c, budget);

    FractionalWitness w;
    w.value = lp.value;
    w.dual = lp.primal; // packing variables = vertex weights
    for (int i = 0; i < m; ++i) {
        if (lp.dual[i] == 0) continue;
        w.primal_sets.push_back(sets[i]);
        w.primal_weights.push_back(lp.dual[i]);
    }
    w.method = "lp";
    if (!verify_fractional_witness(G, w)) throw std::logic_error("fractional LP produced an invalid witness");
    return w;
}

} // namespace gyro
