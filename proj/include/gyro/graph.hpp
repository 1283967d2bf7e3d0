#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gyro/bitset.hpp"
#include "gyro/errors.hpp"
#include "gyro/group.hpp"

namespace gyro {

/// Cayley provenance kept by the circulant/cayley/hamming constructors.
/// Vertex i corresponds to group.element_at(i).
struct CayleyStructure {
    AbelianGroup group;
    ConnectionSet connection;
};

/// Finite simple graph with bit-row adjacency.
///
/// The `vt` flag means "vertex-transitive by construction": it is set only by
/// constructors that guarantee transitivity and propagated through products;
/// it is never inferred from automorphisms.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    bool vt = false;
    std::string label;
    std::optional<CayleyStructure> cayley;
    // operands of a disjoint union, kept so that decompositions (and their vt
    // flags) survive; dropped by every other constructor
    std::vector<Graph> union_parts;

    Graph() = default;
    explicit Graph(int n_, std::string label_ = "") : n(n_), adj(n_, Bitset(n_)), label(std::move(label_)) {
        if (n < 1) throw input_error("graph needs at least one vertex");
    }

    bool has_edge(int u, int v) const { return adj[u].test(v); }

    void add_edge(int u, int v) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        adj[u].set(v);
        adj[v].set(u);
    }

    int degree(int v) const { return adj[v].count(); }

    std::int64_t edge_count() const {
        std::int64_t deg_sum = 0;
        for (int v = 0; v < n; ++v) deg_sum += degree(v);
        return deg_sum / 2;
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = adj[u].next(u + 1); v >= 0; v = adj[u].next(v + 1)) e.emplace_back(u, v);
        return e;
    }

    int max_degree_vertex() const {
        int best = 0;
        for (int v = 1; v < n; ++v)
            if (degree(v) > degree(best)) best = v;
        return best;
    }

    /// Vertices sorted by degree descending, ties by index ascending.
    std::vector<int> degree_order() const {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) > degree(b); });
        return order;
    }

    /// Symmetric adjacency with empty diagonal.
    bool invariants_hold() const {
        for (int u = 0; u < n; ++u) {
            if (adj[u].test(u)) return false;
            for (int v = 0; v < n; ++v)
                if (adj[u].test(v) != adj[v].test(u)) return false;
        }
        return true;
    }
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges, std::string label = "") {
    Graph g(n, std::move(label));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// K_p as the circular clique K_{p/1}; vertex-transitive by construction.
inline Graph complete_graph(int p) {
    if (p < 1) throw input_error("complete graph needs at least one vertex");
    Graph g(p, "K" + std::to_string(p));
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) g.add_edge(i, j);
    g.vt = true;
    return g;
}

/// Circular clique K_{p/q}: vertices 0..p-1, i ~ j iff q <= |i-j| <= p-q.
inline Graph circular_clique(int p, int q) {
    if (q < 1 || p < 2 * q) throw input_error("circular clique requires p >= 2q >= 2");
    Graph g(p, "circclique:" + std::to_string(p) + "," + std::to_string(q));
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            int d = j - i;
            if (d >= q && d <= p - q) g.add_edge(i, j);
        }
    g.vt = true;
    return g;
}

namespace detail {
/// k-subsets of {0..n-1} in colex order (compare sorted tuples from the
/// largest element down).
inline std::vector<std::vector<int>> colex_subsets(int n, int k) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if ((int)cur.size() == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = next; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(subsets.begin(), subsets.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int i = (int)a.size() - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return subsets;
}
} // namespace detail

/// Kneser graph K(n,k): k-subsets of [n] in colex order, adjacent when disjoint.
inline Graph kneser(int n, int k) {
    if (k < 1 || n < 2 * k) throw input_error("Kneser graph requires n >= 2k >= 2");
    auto subsets = detail::colex_subsets(n, k);
    Graph g((int)subsets.size(), "kneser:" + std::to_string(n) + "," + std::to_string(k));
    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return false;
            (a[i] < b[j]) ? ++i : ++j;
        }
        return true;
    };
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (disjoint(subsets[u], subsets[v])) g.add_edge(u, v);
    g.vt = true;
    return g;
}

/// The k-subsets indexing the vertices of kneser(n,k), in vertex order.
inline std::vector<std::vector<int>> kneser_vertex_subsets(int n, int k) {
    if (k < 1 || n < 2 * k) throw input_error("Kneser graph requires n >= 2k >= 2");
    return detail::colex_subsets(n, k);
}

/// Cayley graph C(Z,S): x ~ y iff y - x in S.  Vertices in mixed-radix order.
inline Graph cayley(const AbelianGroup& Z, const ConnectionSet& S, std::string label = "") {
    if (!(S.group == Z)) throw input_error("connection set belongs to a different group");
    if (label.empty()) label = "cayley:" + Z.str() + ":|S|=" + std::to_string(S.indices.size());
    Graph g((int)Z.order, std::move(label));
    for (std::int64_t x = 0; x < Z.order; ++x) {
        GroupElement ex = Z.element_at(x);
        for (auto s : S.indices) {
            std::int64_t y = Z.index_of(Z.add(ex, Z.element_at(s)));
            if (y != x) {
                g.adj[x].set(y);
                g.adj[y].set(x);
            }
        }
    }
    g.vt = true;
    g.cayley = CayleyStructure{Z, S};
    return g;
}

/// Circulant graph C(N,S) = Cayley graph of the cyclic group Z_N.
inline Graph circulant(std::int64_t N, const std::vector<std::int64_t>& S) {
    AbelianGroup Z({N});
    std::vector<GroupElement> elems;
    for (auto s : S) elems.push_back(Z.reduce({s}));
    std::string label = "circulant:" + std::to_string(N) + ":";
    std::vector<std::int64_t> sorted;
    for (const auto& e : elems) sorted.push_back(e[0]);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) label += (i ? "," : "") + std::to_string(sorted[i]);
    return cayley(Z, ConnectionSet(Z, elems), label);
}

/// Cayley graph of Z_2^n with all Hamming-weight-d vectors as generators.
/// Symmetry is automatic: every element of Z_2^n is its own inverse.
inline Graph hamming_cayley(int n, int d) {
    if (d < 1 || d > n) throw input_error("hamming_cayley requires 1 <= d <= n");
    if (n > 20) throw input_error("hamming_cayley limited to n <= 20");
    AbelianGroup Z(std::vector<std::int64_t>(n, 2));
    std::vector<GroupElement> gens;
    for (std::int64_t idx = 1; idx < Z.order; ++idx) {
        GroupElement e = Z.element_at(idx);
        int w = 0;
        for (auto b : e) w += (int)b;
        if (w == d) gens.push_back(e);
    }
    return cayley(Z, ConnectionSet(Z, gens), "hamming:" + std::to_string(n) + "," + std::to_string(d));
}

/// Cartesian product: (v,v') ~ (w,w') iff v=w and v'w' in E(H), or v'=w' and vw in E(G).
inline Graph cartesian(const Graph& G, const Graph& H) {
    Graph P(G.n * H.n, "cartesian(" + G.label + "," + H.label + ")");
    auto id = [&](int v, int w) { return v * H.n + w; };
    for (int v = 0; v < G.n; ++v)
        for (int w = 0; w < H.n; ++w) {
            for (int w2 = H.adj[w].next(w + 1); w2 >= 0; w2 = H.adj[w].next(w2 + 1)) P.add_edge(id(v, w), id(v, w2));
            for (int v2 = G.adj[v].next(v + 1); v2 >= 0; v2 = G.adj[v].next(v2 + 1)) P.add_edge(id(v, w), id(v2, w));
        }
    P.vt = G.vt && H.vt;
    return P;
}

/// Lexicographic product G[H]: (v,v') ~ (w,w') iff vw in E(G), or v=w and v'w' in E(H).
inline Graph lexicographic(const Graph& G, const Graph& H) {
    Graph P(G.n * H.n, "lex(" + G.label + "," + H.label + ")");
    auto id = [&](int v, int w) { return v * H.n + w; };
    for (int v = 0; v < G.n; ++v) {
        for (int w = 0; w < H.n; ++w)
            for (int w2 = H.adj[w].next(w + 1); w2 >= 0; w2 = H.adj[w].next(w2 + 1)) P.add_edge(id(v, w), id(v, w2));
        for (int v2 = G.adj[v].next(v + 1); v2 >= 0; v2 = G.adj[v].next(v2 + 1))
            for (int w = 0; w < H.n; ++w)
                for (int w2 = 0; w2 < H.n; ++w2) P.add_edge(id(v, w), id(v2, w2));
    }
    P.vt = G.vt && H.vt;
    return P;
}

inline Graph disjoint_union(const Graph& G, const Graph& H) {
    Graph U(G.n + H.n, "union(" + G.label + "," + H.label + ")");
    for (auto [u, v] : G.edges()) U.add_edge(u, v);
    for (auto [u, v] : H.edges()) U.add_edge(G.n + u, G.n + v);
    U.union_parts = {G, H};
    return U;
}

/// Glue vertex u of G to vertex v of H.  The merged vertex keeps index u;
/// remaining H vertices follow in order.
inline Graph identify(const Graph& G, int u, const Graph& H, int v) {
    if (u < 0 || u >= G.n) throw input_error("identify: vertex out of range in first graph");
    if (v < 0 || v >= H.n) throw input_error("identify: vertex out of range in second graph");
    Graph R(G.n + H.n - 1, "identify(" + G.label + "," + std::to_string(u) + "," + H.label + "," + std::to_string(v) + ")");
    for (auto [a, b] : G.edges()) R.add_edge(a, b);
    auto remap = [&](int w) { return w == v ? u : (w < v ? G.n + w : G.n + w - 1); };
    for (auto [a, b] : H.edges()) R.add_edge(remap(a), remap(b));
    return R;
}

inline Graph complement(const Graph& G) {
    Graph C(G.n, "complement(" + G.label + ")");
    for (int u = 0; u < G.n; ++u)
        for (int v = u + 1; v < G.n; ++v)
            if (!G.has_edge(u, v)) C.add_edge(u, v);
    return C;
}

/// Line graph: vertices are the edges of G in sorted order, adjacent when
/// the edges share an endpoint.
inline Graph line_graph(const Graph& G) {
    auto E = G.edges();
    if (E.empty()) throw input_error("line graph of an edgeless graph is empty");
    Graph L((int)E.size(), "line(" + G.label + ")");
    for (std::size_t i = 0; i < E.size(); ++i)
        for (std::size_t j = i + 1; j < E.size(); ++j) {
            auto [a, b] = E[i];
            auto [c, d] = E[j];
            if (a == c || a == d || b == c || b == d) L.add_edge((int)i, (int)j);
        }
    return L;
}

/// Induced subgraph on the given vertices (in the given order).
inline Graph induced_subgraph(const Graph& G, const std::vector<int>& verts, std::string label = "") {
    Graph S((int)verts.size(), label.empty() ? G.label + "[induced]" : std::move(label));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (G.has_edge(verts[i], verts[j])) S.add_edge((int)i, (int)j);
    return S;
}

inline Graph relabel(const Graph& G, const std::vector<int>& perm) {
    // perm[v] = new index of old vertex v
    Graph R(G.n, G.label + "[relabeled]");
    for (auto [u, v] : G.edges()) R.add_edge(perm[u], perm[v]);
    return R;
}

/// Connected components as vertex lists, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& G) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(G.n, false);
    for (int s = 0; s < G.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w = G.adj[v].next(0); w >= 0; w = G.adj[v].next(w + 1))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace gyro
