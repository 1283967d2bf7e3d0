#pragma once

#include <algorithm>
#include <vector>

#include "gyro/bitset.hpp"
#include "gyro/errors.hpp"
#include "gyro/graph.hpp"

namespace gyro {

namespace detail {

/// Greedy color count of the vertices in P (induced), used as a clique upper
/// bound, plus the color-sorted processing order (ascending color).
inline void color_sort(const std::vector<Bitset>& adj, const Bitset& P, std::vector<int>& out_verts,
                       std::vector<int>& out_colors) {
    out_verts.clear();
    out_colors.clear();
    Bitset uncolored = P;
    int color = 0;
    while (uncolored.any()) {
        ++color;
        Bitset avail = uncolored;
        for (int v = avail.next(0); v >= 0; v = avail.next(v + 1)) {
            out_verts.push_back(v);
            out_colors.push_back(color);
            uncolored.reset(v);
            avail.and_not(adj[v]);
            avail.reset(v);
        }
    }
}

/// Branch-and-bound maximum clique with a greedy-coloring bound.
struct MaxCliqueSolver {
    const std::vector<Bitset>& adj;
    int n;
    Budget* budget;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> cur;

    MaxCliqueSolver(const std::vector<Bitset>& adj_, Budget* budget_)
        : adj(adj_), n((int)adj_.size()), budget(budget_) {}

    void expand(const Bitset& P) {
        charge(budget);
        std::vector<int> verts, colors;
        color_sort(adj, P, verts, colors);
        for (int i = (int)verts.size() - 1; i >= 0; --i) {
            if ((int)cur.size() + colors[i] <= best) return;
            int v = verts[i];
            cur.push_back(v);
            Bitset P2 = P;
            P2 &= adj[v];
            for (int j = i; j < (int)verts.size(); ++j) P2.reset(verts[j]);
            if (P2.any()) {
                expand(P2);
            } else if ((int)cur.size() > best) {
                best = (int)cur.size();
                best_set = cur;
            }
            cur.pop_back();
        }
    }

    void run() {
        Bitset P(n);
        P.set_all();
        if (n == 0) return;
        expand(P);
    }
};

inline std::vector<Bitset> complement_rows(const Graph& G) {
    std::vector<Bitset> rows(G.n, Bitset(G.n));
    for (int v = 0; v < G.n; ++v) {
        rows[v].set_all();
        rows[v].and_not(G.adj[v]);
        rows[v].reset(v);
    }
    return rows;
}

} // namespace detail

struct IndependenceResult {
    int alpha;
    std::vector<int> witness; // sorted, independent, of size alpha
};

/// Exact maximum independent set size via branch-and-bound maximum clique on
/// the complement.
inline IndependenceResult independence_number(const Graph& G, Budget* budget = nullptr) {
    auto rows = detail::complement_rows(G);
    detail::MaxCliqueSolver solver(rows, budget);
    solver.run();
    std::sort(solver.best_set.begin(), solver.best_set.end());
    return {solver.best, solver.best_set};
}

/// Maximum clique size. Equals the independence number of the complement.
inline int clique_number(const Graph& G, Budget* budget = nullptr) {
    detail::MaxCliqueSolver solver(G.adj, budget);
    solver.run();
    return solver.best;
}

inline bool is_independent_set(const Graph& G, const std::vector<int>& verts) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= G.n) return false;
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (G.has_edge(verts[i], verts[j])) return false;
    }
    return true;
}

/// All independent sets of maximum size, in lexicographic order.
inline std::vector<std::vector<int>> enumerate_maximum_independent_sets(const Graph& G, Budget* budget = nullptr) {
    int alpha = independence_number(G, budget).alpha;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto nonadj = detail::complement_rows(G);
    auto dfs = [&](auto&& self, Bitset P) -> void {
        charge(budget);
        if ((int)cur.size() == alpha) {
            out.push_back(cur);
            return;
        }
        while (P.any()) {
            if ((int)cur.size() + P.count() < alpha) return;
            int v = P.next(0);
            Bitset P2 = P;
            P2 &= nonadj[v];
            P2.reset(v);
            cur.push_back(v);
            self(self, P2);
            cur.pop_back();
            P.reset(v);
        }
    };
    Bitset all(G.n);
    all.set_all();
    dfs(dfs, all);
    std::sort(out.begin(), out.end());
    return out;
}

/// Lexicographically least maximum independent set (include-first DFS).
inline std::vector<int> lexmin_maximum_independent_set(const Graph& G, Budget* budget = nullptr) {
    int alpha = independence_number(G, budget).alpha;
    auto nonadj = detail::complement_rows(G);
    std::vector<int> cur, result;
    auto dfs = [&](auto&& self, Bitset P) -> bool {
        charge(budget);
        if ((int)cur.size() == alpha) {
            result = cur;
            return true;
        }
        while (P.any()) {
            if ((int)cur.size() + P.count() < alpha) return false;
            int v = P.next(0);
            Bitset P2 = P;
            P2 &= nonadj[v];
            P2.reset(v);
            cur.push_back(v);
            if (self(self, P2)) return true;
            cur.pop_back();
            P.reset(v);
        }
        return false;
    };
    Bitset all(G.n);
    all.set_all();
    dfs(dfs, all);
    return result;
}

/// All inclusion-maximal independent sets via pivoting Bron-Kerbosch on the
/// complement, in lexicographic order.  Throws budget_error (carrying the
/// partial count) if more than `cap` sets exist.
inline std::vector<std::vector<int>> enumerate_maximal_independent_sets(const Graph& G, std::uint64_t cap) {
    if (cap < 1) throw input_error("maximal independent set cap must be >= 1");
    auto nonadj = detail::complement_rows(G);
    std::vector<std::vector<int>> out;
    std::vector<int> cur;

    auto bk = [&](auto&& self, Bitset P, Bitset X) -> void {
        if (P.none() && X.none()) {
            if ((std::uint64_t)out.size() >= cap)
                throw budget_error("maximal independent set cap exceeded", out.size());
            out.push_back(cur);
            std::sort(out.back().begin(), out.back().end());
            return;
        }
        // pivot: vertex of P | X maximizing |P & nonadj(pivot)|
        int pivot = -1, best_cover = -1;
        Bitset PX = P;
        PX |= X;
        for (int u = PX.next(0); u >= 0; u = PX.next(u + 1)) {
            Bitset c = P;
            c &= nonadj[u];
            int cnt = c.count();
            if (cnt > best_cover) {
                best_cover = cnt;
                pivot = u;
            }
        }
        Bitset candidates = P;
        candidates.and_not(nonadj[pivot]);
        for (int v = candidates.next(0); v >= 0; v = candidates.next(v + 1)) {
            Bitset P2 = P, X2 = X;
            P2 &= nonadj[v];
            X2 &= nonadj[v];
            cur.push_back(v);
            self(self, P2, X2);
            cur.pop_back();
            P.reset(v);
            X.set(v);
        }
    };

    Bitset P(G.n), X(G.n);
    P.set_all();
    bk(bk, P, X);
    std::sort(out.begin(), out.end());
    return out;
}

/// Sequential greedy coloring in degree-descending order; returns the number
/// of colors used and the coloring.  Upper-bounds the chromatic number.
inline std::pair<int, std::vector<int>> greedy_coloring(const Graph& G) {
    std::vector<int> color(G.n, -1);
    int k = 0;
    for (int v : G.degree_order()) {
        std::vector<bool> used(k + 1, false);
        for (int u = G.adj[v].next(0); u >= 0; u = G.adj[v].next(u + 1))
            if (color[u] >= 0) used[color[u]] = true;
        int c = 0;
        while (used[c]) ++c;
        color[v] = c;
        k = std::max(k, c + 1);
    }
    return {k, color};
}

} // namespace gyro
