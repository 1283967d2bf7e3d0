#pragma once

#include <optional>
#include <vector>

#include "gyro/errors.hpp"
#include "gyro/graph.hpp"

namespace gyro {

namespace detail {

struct HomOptions {
    // Pin the first vertex in the search order to target 0.  Only sound for
    // vertex-transitive targets.
    bool fix_first_to_zero = false;
    Budget* budget = nullptr;
};

inline bool is_complete(const Graph& H) {
    return H.edge_count() == (std::int64_t)H.n * (H.n - 1) / 2;
}

/// Plain backtracking homomorphism search.  Variable order: degree descending
/// (ties by index); targets tried in ascending order, so the returned map is
/// the lexicographically least homomorphism under that order.  For complete
/// targets, color symmetry is broken by allowing at most one fresh target per
/// step; the least map already has that shape, so the result is unchanged.
inline std::optional<std::vector<int>> find_homomorphism_impl(const Graph& G, const Graph& H, HomOptions opt) {
    std::vector<int> order = G.degree_order();
    std::vector<int> f(G.n, -1);
    const bool complete = is_complete(H) && H.n >= 2;

    // neighbors of each vertex that appear earlier in the search order
    std::vector<std::vector<int>> earlier(G.n);
    {
        std::vector<int> pos(G.n);
        for (int i = 0; i < G.n; ++i) pos[order[i]] = i;
        for (int i = 0; i < G.n; ++i) {
            int v = order[i];
            for (int u = G.adj[v].next(0); u >= 0; u = G.adj[v].next(u + 1))
                if (pos[u] < i) earlier[v].push_back(u);
        }
    }

    auto rec = [&](auto&& self, int depth, int used) -> bool {
        if (depth == G.n) return true;
        int v = order[depth];
        int hi = H.n - 1;
        if (complete) hi = std::min(hi, used); // first unused target only
        int lo = 0;
        if (depth == 0 && opt.fix_first_to_zero) hi = 0;
        for (int h = lo; h <= hi; ++h) {
            charge(opt.budget);
            bool ok = true;
            for (int u : earlier[v])
                if (!H.adj[h].test(f[u])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            f[v] = h;
            if (self(self, depth + 1, std::max(used, h + 1))) return true;
            f[v] = -1;
        }
        return false;
    };

    if (!rec(rec, 0, 0)) return std::nullopt;
    return f;
}

} // namespace detail

/// Check that every edge of G maps to an edge of H.
inline bool is_homomorphism(const Graph& G, const Graph& H, const std::vector<int>& f) {
    if ((int)f.size() != G.n) return false;
    for (int v = 0; v < G.n; ++v)
        if (f[v] < 0 || f[v] >= H.n) return false;
    for (auto [u, v] : G.edges())
        if (!H.has_edge(f[u], f[v])) return false;
    return true;
}

/// Deterministic backtracking search for a homomorphism G -> H.
/// An empty result means no homomorphism exists.
inline std::optional<std::vector<int>> find_homomorphism(const Graph& G, const Graph& H) {
    auto f = detail::find_homomorphism_impl(G, H, {});
    if (f && !is_homomorphism(G, H, *f)) throw std::logic_error("homomorphism search returned an invalid map");
    return f;
}

} // namespace gyro
