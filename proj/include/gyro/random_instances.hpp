#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gyro/certificate.hpp"
#include "gyro/graph.hpp"
#include "gyro/group.hpp"

namespace gyro {

/// splitmix64: tiny, portable, and fully deterministic for a fixed seed, so
/// random corpora reproduce across machines and standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t k) { return next() % k; }
    bool chance(int percent) { return below(100) < (std::uint64_t)percent; }
};

inline Graph random_graph(Rng& rng, int n, int edge_percent, std::string label = "random") {
    Graph g(n, std::move(label));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent)) g.add_edge(u, v);
    return g;
}

/// Nonempty symmetric connection set avoiding the identity.
inline ConnectionSet random_connection_set(Rng& rng, const AbelianGroup& Z) {
    while (true) {
        std::vector<GroupElement> elems;
        for (std::int64_t i = 1; i < Z.order; ++i) {
            GroupElement e = Z.element_at(i);
            GroupElement m = Z.neg(e);
            if (Z.index_of(m) < i) continue; // one decision per {g,-g} class
            if (rng.chance(50)) {
                elems.push_back(e);
                if (!(m == e)) elems.push_back(m);
            }
        }
        if (!elems.empty()) return ConnectionSet(Z, elems);
    }
}

/// Random valid base certificate: draw a proper vertex map (edge endpoints
/// must get distinct group elements), then grow A greedily in a random order,
/// keeping only elements that preserve validity.  Singletons always work once
/// f is proper, so the result is nonempty.  Returns nothing if |Z| cannot
/// properly color G within the retry limit.
inline std::optional<BaseCertificate> random_valid_certificate(Rng& rng, const Graph& G, const AbelianGroup& Z,
                                                               int retries = 200) {
    for (int attempt = 0; attempt < retries; ++attempt) {
        BaseCertificate cert;
        cert.group = Z;
        cert.graph_label = G.label;
        cert.f.clear();
        bool proper = true;
        for (int v = 0; v < G.n && proper; ++v) {
            for (int tries = 0; tries < 4 * (int)Z.order; ++tries) {
                GroupElement cand = Z.element_at((std::int64_t)rng.below(Z.order));
                bool ok = true;
                for (int u = G.adj[v].next(0); u >= 0 && u < v; u = G.adj[v].next(u + 1))
                    if (cert.f[u] == cand) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    cert.f.push_back(cand);
                    break;
                }
            }
            proper = (int)cert.f.size() == v + 1;
        }
        if (!proper) continue;

        std::vector<std::int64_t> order(Z.order);
        for (std::int64_t i = 0; i < Z.order; ++i) order[i] = i;
        for (std::int64_t i = Z.order - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        for (auto idx : order) {
            cert.A.push_back(Z.element_at(idx));
            if (!verify_base(G, cert).valid) cert.A.pop_back();
        }
        if (!cert.A.empty()) {
            cert.normalize();
            return cert;
        }
    }
    return std::nullopt;
}

} // namespace gyro
