#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "gyro/certificate.hpp"
#include "gyro/errors.hpp"
#include "gyro/graph.hpp"
#include "gyro/group.hpp"
#include "gyro/homomorphism.hpp"
#include "gyro/independent_sets.hpp"

namespace gyro {

/// Every independent set of a Cayley graph C(Z,S) is a coloring Z-base with
/// the identity map: for an edge xy the difference y-x lies in S, and A being
/// independent means A and A+s are disjoint for every s in S.
inline BaseCertificate base_from_independent_set(const Graph& G, const std::vector<int>& I) {
    if (!G.cayley) throw input_error("graph was not constructed as a Cayley graph");
    if (!is_independent_set(G, I)) throw input_error("set is not independent");
    if (I.empty()) throw input_error("independent set is empty");
    const auto& Z = G.cayley->group;
    BaseCertificate cert;
    cert.group = Z;
    for (int v : I) cert.A.push_back(Z.element_at(v));
    cert.f.reserve(G.n);
    for (int v = 0; v < G.n; ++v) cert.f.push_back(Z.element_at(v));
    cert.graph_label = G.label;
    cert.normalize();
    return cert;
}

/// Discretize a circular p/q-coloring: the arc [0,q) of Z_p is a base and the
/// homomorphism into the circular clique provides the shifts.
inline BaseCertificate base_from_circular_coloring(const Graph& G, int p, int q, const std::vector<int>& hom) {
    Graph target = circular_clique(p, q); // validates p >= 2q >= 2
    if (!is_homomorphism(G, target, hom)) throw input_error("map is not a homomorphism into the circular clique");
    BaseCertificate cert;
    cert.group = AbelianGroup({p});
    for (std::int64_t x = 0; x < q; ++x) cert.A.push_back({x});
    cert.f.reserve(G.n);
    for (int v = 0; v < G.n; ++v) cert.f.push_back({(std::int64_t)hom[v]});
    cert.graph_label = G.label;
    return cert;
}

/// Turn a certificate for G into one for the Cartesian square G box G by
/// adding shifts coordinatewise: f'(v,v') = f(v) + f(v').  The base set and
/// density are unchanged.
inline BaseCertificate lift_base_to_product(const Graph& G, const BaseCertificate& cert) {
    auto validity = verify_base(G, cert);
    if (!validity.valid) throw input_error("certificate is not valid for the base graph: " + validity.message);
    const auto& Z = cert.group;
    BaseCertificate lifted;
    lifted.group = Z;
    lifted.A = cert.A;
    lifted.f.reserve((std::size_t)G.n * G.n);
    for (int v = 0; v < G.n; ++v)
        for (int w = 0; w < G.n; ++w) lifted.f.push_back(Z.add(cert.f[v], cert.f[w]));
    lifted.graph_label = "cartesian(" + cert.graph_label + "," + cert.graph_label + ")";
    return lifted;
}

/// Replicate a Z_N certificate across Z_{mN}: A' = { x + jN : x in A, j < m },
/// shifts unchanged.  Density is preserved.
inline BaseCertificate expand_modulus(const BaseCertificate& cert, std::int64_t m) {
    if (cert.group.rank() != 1) throw input_error("expand_modulus requires a single cyclic factor");
    if (m < 1) throw input_error("expansion factor must be >= 1");
    std::int64_t N = cert.group.moduli[0];
    BaseCertificate out;
    out.group = AbelianGroup({m * N});
    for (const auto& a : cert.A)
        for (std::int64_t j = 0; j < m; ++j) out.A.push_back({a[0] + j * N});
    out.f = cert.f; // values lie in [0, N) which embeds in [0, mN)
    out.graph_label = cert.graph_label;
    out.normalize();
    return out;
}

/// Inflate a Z_N^d certificate to a single cyclic group Z_M, M = P_1...P_d,
/// with d distinct primes P_i in the window ((k+1)N, (k+2)N):
///   A' = { (x_i + y_i N)_i : x in A, y in {1..k}^d }  inside  Z_{P_1} x ... x Z_{P_d},
/// pulled back along the Chinese-remainder isomorphism Z_M -> prod Z_{P_i}.
/// Every coordinate stays below (k+1)N < P_i, so no wrap-around can create a
/// collision and validity is inherited; density becomes k^d |A| / M.
inline BaseCertificate crt_inflate(const BaseCertificate& cert, std::int64_t k,
                                   const std::vector<std::int64_t>& primes) {
    const auto& Z = cert.group;
    const std::size_t d = Z.rank();
    std::int64_t N = Z.moduli[0];
    for (auto m : Z.moduli)
        if (m != N) throw input_error("crt_inflate requires all cyclic factors equal");
    if (k < 1) throw input_error("crt_inflate requires k >= 1");
    if (primes.size() != d) throw input_error("need exactly one prime per cyclic factor");
    std::set<std::int64_t> distinct(primes.begin(), primes.end());
    if (distinct.size() != primes.size()) throw input_error("primes must be pairwise distinct");
    for (auto P : primes) {
        if (!is_prime(P)) throw input_error(std::to_string(P) + " is not prime");
        if (!(P > (k + 1) * N && P < (k + 2) * N))
            throw input_error("prime " + std::to_string(P) + " outside the window (" + std::to_string((k + 1) * N) +
                              "," + std::to_string((k + 2) * N) + ")");
    }

    std::int64_t M = 1;
    for (auto P : primes) {
        if (M > (std::int64_t(1) << 40) / P) throw input_error("inflated modulus too large");
        M *= P;
    }
    AbelianGroup ZM({M});

    // CRT reconstruction x = sum r_i * (M/P_i) * inv(M/P_i mod P_i)  (mod M)
    std::vector<std::int64_t> basis(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::int64_t Mi = M / primes[i];
        basis[i] = (std::int64_t)((__int128)Mi * mod_inverse(Mi % primes[i], primes[i]) % M);
    }
    auto crt_preimage = [&](const std::vector<std::int64_t>& residues) {
        std::int64_t x = 0;
        for (std::size_t i = 0; i < d; ++i) x = (std::int64_t)((x + (__int128)basis[i] * residues[i] % M) % M);
        return x;
    };

    BaseCertificate out;
    out.group = ZM;
    std::vector<std::int64_t> residues(d);
    std::vector<std::int64_t> y(d, 1);
    for (const auto& a : cert.A) {
        std::fill(y.begin(), y.end(), 1);
        while (true) {
            for (std::size_t i = 0; i < d; ++i) residues[i] = a[i] + y[i] * N;
            out.A.push_back({crt_preimage(residues)});
            std::size_t i = 0;
            for (; i < d; ++i) {
                if (++y[i] <= k) break;
                y[i] = 1;
            }
            if (i == d) break;
        }
    }
    out.f.reserve(cert.f.size());
    for (const auto& fv : cert.f) out.f.push_back({crt_preimage(fv)});
    out.graph_label = cert.graph_label;
    out.normalize();
    return out;
}

/// The characteristic-vector homomorphism from the Kneser graph K(n,k) into
/// the weight-2k Hamming Cayley graph on Z_2^n: disjoint k-sets are exactly
/// the pairs whose indicator vectors differ in 2k coordinates.
inline std::vector<int> kneser_characteristic_hom(int n, int k) {
    auto subsets = kneser_vertex_subsets(n, k);
    AbelianGroup Z2n(std::vector<std::int64_t>(n, 2));
    std::vector<int> hom;
    hom.reserve(subsets.size());
    for (const auto& s : subsets) {
        GroupElement v(n, 0);
        for (int i : s) v[i] = 1;
        hom.push_back((int)Z2n.index_of(v));
    }
    Graph G = kneser(n, k);
    Graph H = hamming_cayley(n, 2 * k);
    if (!is_homomorphism(G, H, hom)) throw std::logic_error("characteristic-vector map failed verification");
    return hom;
}

/// Pull a certificate back along a homomorphism h : G -> C(Z,S): the base set
/// stays, the shifts become f(h(v)).
inline BaseCertificate pullback_certificate(const Graph& G, const std::vector<int>& hom,
                                            const BaseCertificate& target_cert, std::string label = "") {
    BaseCertificate cert;
    cert.group = target_cert.group;
    cert.A = target_cert.A;
    cert.f.reserve(G.n);
    for (int v = 0; v < G.n; ++v) {
        if (hom[v] < 0 || hom[v] >= (int)target_cert.f.size()) throw input_error("homomorphism image out of range");
        cert.f.push_back(target_cert.f[hom[v]]);
    }
    cert.graph_label = label.empty() ? G.label : std::move(label);
    return cert;
}

} // namespace gyro
