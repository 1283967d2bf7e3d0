#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gyro/bitset.hpp"
#include "gyro/errors.hpp"
#include "gyro/graph.hpp"
#include "gyro/group.hpp"
#include "gyro/rational.hpp"

namespace gyro {

/// Discrete coloring-base certificate: a set A inside a finite abelian group
/// and a vertex map f such that the translates A+f(u) and A+f(v) are disjoint
/// across every edge.  Its density |A|/|Z| lower-bounds sigma_Z(G).
struct BaseCertificate {
    AbelianGroup group;
    std::vector<GroupElement> A; // kept sorted lexicographically
    std::vector<GroupElement> f; // indexed by vertex
    std::string graph_label;

    Rational density() const { return Rational((std::int64_t)A.size(), group.order); }

    void normalize() { std::sort(A.begin(), A.end()); }
};

struct BaseViolation {
    int u, v;                 // first violating edge
    GroupElement collision;   // element in both translates
};

struct BaseValidity {
    bool valid;
    std::optional<BaseViolation> violation;
    std::string message;
};

/// Shape-check a certificate against a graph; throws input_error on mismatch.
inline void check_certificate_shape(const Graph& G, const BaseCertificate& cert) {
    if ((int)cert.f.size() != G.n)
        throw input_error("certificate maps " + std::to_string(cert.f.size()) + " vertices, graph has " +
                          std::to_string(G.n));
    if (cert.A.empty()) throw input_error("certificate base set is empty");
    for (const auto& a : cert.A)
        if (!cert.group.reduced(a)) throw input_error("certificate base element not reduced");
    for (const auto& x : cert.f)
        if (!cert.group.reduced(x)) throw input_error("certificate shift not reduced");
}

/// Decide validity: every edge's translates must be disjoint.  Reports the
/// first violating edge (in lexicographic edge order) and a colliding element.
inline BaseValidity verify_base(const Graph& G, const BaseCertificate& cert) {
    check_certificate_shape(G, cert);
    const auto& Z = cert.group;

    // bitmask of A + f(v) per distinct shift
    std::vector<Bitset> translate(G.n);
    std::vector<std::int64_t> shift_index(G.n);
    for (int v = 0; v < G.n; ++v) shift_index[v] = Z.index_of(cert.f[v]);
    for (int v = 0; v < G.n; ++v) {
        translate[v] = Bitset((int)Z.order);
        for (const auto& a : cert.A) translate[v].set((int)Z.index_of(Z.add(a, cert.f[v])));
    }

    for (auto [u, v] : G.edges()) {
        if (translate[u].intersects(translate[v])) {
            Bitset common = translate[u];
            common &= translate[v];
            GroupElement witness = Z.element_at(common.next(0));
            std::string msg = "translates collide on edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
            return {false, BaseViolation{u, v, witness}, msg};
        }
    }
    return {true, std::nullopt, "valid"};
}

} // namespace gyro
