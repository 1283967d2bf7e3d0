#pragma once

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gyro/certificate.hpp"
#include "gyro/coloring.hpp"
#include "gyro/constructions.hpp"
#include "gyro/errors.hpp"
#include "gyro/fractional.hpp"
#include "gyro/graph.hpp"
#include "gyro/group.hpp"
#include "gyro/homomorphism.hpp"
#include "gyro/independent_sets.hpp"

namespace gyro {

struct SigmaResult {
    Rational density;                        // 0 when no base exists over Z
    std::optional<BaseCertificate> certificate;
    bool exact;                              // false when the budget tripped
    std::uint64_t nodes_used;
};

namespace detail {

struct SigmaCandidate {
    std::vector<std::int64_t> indices; // connection set, sorted
    int alpha = 0;
};

/// Enumerate all symmetric connection sets S of Z (as unions of {g,-g}
/// classes), deduplicated under the unit/factor-swap automorphisms.
inline std::vector<std::vector<std::int64_t>> canonical_symmetric_sets(const AbelianGroup& Z, Budget* budget) {
    std::vector<std::int64_t> neg(Z.order);
    for (std::int64_t i = 0; i < Z.order; ++i) neg[i] = Z.index_of(Z.neg(Z.element_at(i)));

    std::vector<std::int64_t> class_rep;         // smallest index per {g,-g} class
    std::vector<int> class_of(Z.order, -1);
    for (std::int64_t i = 1; i < Z.order; ++i) {
        if (class_of[i] >= 0) continue;
        class_of[i] = (int)class_rep.size();
        class_of[neg[i]] = (int)class_rep.size();
        class_rep.push_back(std::min(i, neg[i]));
    }
    const int c = (int)class_rep.size();
    if (c > 22) throw budget_error("too many symmetric connection-set classes to enumerate (" + std::to_string(c) + ")");

    auto autos = unit_automorphisms(Z);
    std::vector<std::vector<int>> class_perm(autos.size(), std::vector<int>(c));
    for (std::size_t a = 0; a < autos.size(); ++a)
        for (int ci = 0; ci < c; ++ci) class_perm[a][ci] = class_of[autos[a][class_rep[ci]]];

    std::vector<bool> seen(std::size_t(1) << c, false);
    std::vector<std::vector<std::int64_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << c); ++mask) {
        charge(budget);
        if (seen[mask]) continue;
        std::uint64_t canon = mask;
        for (const auto& perm : class_perm) {
            std::uint64_t img = 0;
            for (int ci = 0; ci < c; ++ci)
                if (mask >> ci & 1) img |= std::uint64_t(1) << perm[ci];
            seen[img] = true;
            canon = std::min(canon, img);
        }
        if (canon != mask) continue;
        std::vector<std::int64_t> indices;
        for (int ci = 0; ci < c; ++ci)
            if (mask >> ci & 1) {
                indices.push_back(class_rep[ci]);
                if (neg[class_rep[ci]] != class_rep[ci]) indices.push_back(neg[class_rep[ci]]);
            }
        std::sort(indices.begin(), indices.end());
        out.push_back(std::move(indices));
    }
    return out;
}

} // namespace detail

/// Exact sigma_Z(G): the best coloring-base density over the group Z.
///
/// sigma_Z(G) equals the maximum of alpha(C(Z,S))/|Z| over symmetric sets S
/// for which G -> C(Z,S): a base (A,f) forces the difference set of f to be
/// such an S with A independent in C(Z,S), and conversely any maximum
/// independent set of an admissible C(Z,S) is a base with f the homomorphism.
/// Candidates are tested in decreasing-alpha order, so the first admissible
/// one is optimal.  Two provable filters avoid hopeless homomorphism tests:
/// alpha(H) * n(G) <= |Z| * alpha(G)  (fractional monotonicity under
/// homomorphisms, with n/alpha lower-bounding chi_f(G)) and
/// omega(H) >= omega(G).  Budget exhaustion downgrades the result to a valid
/// lower bound with `exact` unset.
inline SigmaResult sigma_group_exact(const Graph& G, const AbelianGroup& Z, std::uint64_t budget_limit = 50'000'000,
                                     int threads = 1) {
    if (G.n < 1) throw input_error("sigma needs a nonempty graph");
    Budget budget(budget_limit);

    if (G.edge_count() == 0) {
        BaseCertificate cert;
        cert.group = Z;
        for (std::int64_t i = 0; i < Z.order; ++i) cert.A.push_back(Z.element_at(i));
        cert.f.assign(G.n, Z.zero());
        cert.graph_label = G.label;
        return {Rational(1), cert, true, budget.used()};
    }

    const bool self_cayley = G.cayley && G.cayley->group == Z;
    int incumbent_alpha = 0;
    std::optional<std::vector<std::int64_t>> best_set; // connection set of the winner
    std::optional<std::vector<int>> best_hom;

    SigmaResult out{Rational(0), std::nullopt, true, 0};
    int alpha_G = 0, omega_G = 0;

    try {
        alpha_G = independence_number(G, &budget).alpha;
        omega_G = clique_number(G, &budget);
        if (self_cayley) incumbent_alpha = alpha_G;

        auto sets = detail::canonical_symmetric_sets(Z, &budget);
        std::vector<detail::SigmaCandidate> cands;
        cands.reserve(sets.size());
        for (auto& s : sets) {
            detail::SigmaCandidate cand;
            cand.indices = std::move(s);
            Graph H = cayley(Z, ConnectionSet::from_indices(Z, cand.indices));
            cand.alpha = independence_number(H, &budget).alpha;
            cands.push_back(std::move(cand));
        }
        std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
            if (a.alpha != b.alpha) return a.alpha > b.alpha;
            if (a.indices.size() != b.indices.size()) return a.indices.size() > b.indices.size();
            return a.indices < b.indices;
        });

        // drop candidates that provably admit no homomorphism from G, and
        // those that cannot beat the incumbent
        std::vector<const detail::SigmaCandidate*> todo;
        for (const auto& cand : cands) {
            if (cand.alpha <= incumbent_alpha) continue;
            if ((std::int64_t)cand.alpha * G.n > Z.order * (std::int64_t)alpha_G) continue;
            todo.push_back(&cand);
        }

        struct TaskResult {
            std::optional<std::vector<int>> hom;
            std::uint64_t used = 0;
            bool tripped = false;
        };
        auto run_candidate = [&](const detail::SigmaCandidate& cand, std::uint64_t cap) {
            TaskResult r;
            Budget local(cap);
            try {
                Graph H = cayley(Z, ConnectionSet::from_indices(Z, cand.indices));
                if (clique_number(H, &local) >= omega_G)
                    r.hom = detail::find_homomorphism_impl(G, H, {true, &local});
            } catch (const budget_error&) {
                r.tripped = true;
            }
            r.used = local.used();
            return r;
        };

        const int workers = std::max(1, threads);
        for (std::size_t i = 0; i < todo.size() && !best_hom;) {
            std::size_t block_end = std::min(i + (std::size_t)workers, todo.size());
            std::uint64_t cap = budget.remaining();
            std::vector<std::future<TaskResult>> futs;
            for (std::size_t j = i; j < block_end; ++j)
                futs.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                          [&, j] { return run_candidate(*todo[j], cap); }));
            for (std::size_t j = i; j < block_end; ++j) {
                TaskResult r = futs[j - i].get();
                budget.charge(r.used); // sequential-order accounting
                if (r.tripped) throw budget_error("sigma search budget exhausted", budget.used());
                if (r.hom) {
                    incumbent_alpha = todo[j]->alpha;
                    best_set = todo[j]->indices;
                    best_hom = r.hom;
                    break;
                }
            }
            i = block_end;
        }
    } catch (const budget_error&) {
        out.exact = false;
    }

    out.nodes_used = budget.used();
    if (incumbent_alpha == 0) return out; // no base exists over Z (chi(G) > |Z|)

    out.density = Rational(incumbent_alpha, Z.order);
    BaseCertificate cert;
    cert.group = Z;
    cert.graph_label = G.label;
    if (best_hom) {
        Graph H = cayley(Z, ConnectionSet::from_indices(Z, *best_set));
        for (int v : lexmin_maximum_independent_set(H)) cert.A.push_back(Z.element_at(v));
        cert.f.reserve(G.n);
        for (int v = 0; v < G.n; ++v) cert.f.push_back(Z.element_at((*best_hom)[v]));
    } else {
        // self seed: G's own connection set, identity homomorphism
        for (int v : lexmin_maximum_independent_set(G)) cert.A.push_back(Z.element_at(v));
        cert.f.reserve(G.n);
        for (int v = 0; v < G.n; ++v) cert.f.push_back(Z.element_at(v));
    }
    cert.normalize();
    if (!verify_base(G, cert).valid) throw std::logic_error("sigma search produced an invalid certificate");
    out.certificate = std::move(cert);
    return out;
}

struct UpperBoundResult {
    Rational bound;
    BaseCertificate certificate;
    bool exact;
};

/// Best certificate found over Z_2..Z_nmax plus any extra groups, seeded so
/// the bound never exceeds chi_c (circular seeding) nor |Z|/alpha for Cayley
/// graphs (independent-set seeding).  Returns the reciprocal of the best
/// density together with its certificate.
inline UpperBoundResult gyro_upper_bound(const Graph& G, int nmax, const std::vector<AbelianGroup>& extra_groups = {},
                                         std::uint64_t budget_limit = 50'000'000,
                                         const std::vector<BaseCertificate>& seed_certs = {}, int threads = 1) {
    if (nmax < 2) throw input_error("gyro_upper_bound requires nmax >= 2");
    std::optional<BaseCertificate> best;
    Rational best_density(0);
    bool exact = true;

    auto offer = [&](const BaseCertificate& cert) {
        auto v = verify_base(G, cert);
        if (!v.valid) throw input_error("seed certificate rejected: " + v.message);
        if (cert.density() > best_density) {
            best_density = cert.density();
            best = cert;
        }
    };

    for (const auto& seed : seed_certs) offer(seed);

    if (G.cayley) offer(base_from_independent_set(G, lexmin_maximum_independent_set(G)));

    for (int N = 2; N <= nmax; ++N) {
        auto res = sigma_group_exact(G, AbelianGroup({N}), budget_limit, threads);
        exact = exact && res.exact;
        if (res.certificate) offer(*res.certificate);
    }
    for (const auto& Z : extra_groups) {
        auto res = sigma_group_exact(G, Z, budget_limit, threads);
        exact = exact && res.exact;
        if (res.certificate) offer(*res.certificate);
    }

    // Circular seeding guarantees bound <= chi_c.  When the best density has
    // already reached alpha/n >= 1/chi_f >= 1/chi_c, the circular seed cannot
    // improve on it and chi_c need not be computed.
    if (G.edge_count() > 0) {
        Rational alpha_over_n(independence_number(G).alpha, G.n);
        if (!(best_density >= alpha_over_n)) {
            auto circ = circular_chromatic(G);
            offer(base_from_circular_coloring(G, circ.p, circ.q, circ.hom));
        }
    } else if (!best) {
        auto res = sigma_group_exact(G, AbelianGroup({2}), budget_limit, threads);
        offer(*res.certificate);
    }

    return {Rational(1) / best_density, *best, exact};
}

struct LowerBoundResult {
    Rational bound;
    std::string provenance; // "fractional" | "clique-lemma" | "product-trick"
};

/// Lower bounds on the gyrochromatic number: the fractional chromatic number
/// always applies; (n/(n-1)) * omega applies when omega < chi; and for a
/// disjoint union G1 u G2 the fractional chromatic number of G1 box G2
/// applies because the union and the Cartesian product share their
/// gyrochromatic number.
inline LowerBoundResult gyro_lower_bound(const Graph& G, bool use_product_trick = true,
                                         std::uint64_t column_cap = 200000) {
    Rational best = fractional_chromatic(G, column_cap).value;
    std::string provenance = "fractional";

    int omega = clique_number(G);
    bool omega_below_chi = omega < chromatic_lower_bound(G);
    if (!omega_below_chi && G.edge_count() > 0) omega_below_chi = omega < chromatic_number(G).chi;
    if (omega_below_chi) {
        Rational lemma(Rational((std::int64_t)G.n * omega, G.n - 1));
        if (lemma > best) {
            best = lemma;
            provenance = "clique-lemma";
        }
    }

    if (use_product_trick) {
        std::optional<Graph> product;
        if (G.union_parts.size() == 2) {
            product = cartesian(G.union_parts[0], G.union_parts[1]);
        } else {
            auto comps = connected_components(G);
            if (comps.size() >= 2) {
                std::vector<int> rest;
                for (std::size_t i = 1; i < comps.size(); ++i) rest.insert(rest.end(), comps[i].begin(), comps[i].end());
                product = cartesian(induced_subgraph(G, comps[0]), induced_subgraph(G, rest));
            }
        }
        if (product) {
            Rational trick = fractional_chromatic(*product, column_cap).value;
            if (trick > best) {
                best = trick;
                provenance = "product-trick";
            }
        }
    }
    return {best, provenance};
}

} // namespace gyro
