#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "gyro/certificate.hpp"
#include "gyro/errors.hpp"
#include "gyro/graph.hpp"
#include "gyro/rational.hpp"

namespace gyro {

/// Rational-data gyrocoloring: one base set (a union of half-open intervals
/// of total length one inside [0,z)) whose rational translates are assigned
/// to the vertices.  Only rational data is representable so every check stays
/// exact.
struct ContinuousGyrocoloring {
    Rational z;
    std::vector<std::pair<Rational, Rational>> base; // sorted, disjoint, adjacent runs merged
    std::vector<Rational> shifts;                    // one per vertex, in [0,z)

    Rational base_length() const {
        Rational total(0);
        for (const auto& [a, b] : base) total += b - a;
        return total;
    }
};

/// Normalize and sanity-check interval/shift data.
inline ContinuousGyrocoloring make_gyrocoloring(const Rational& z, std::vector<std::pair<Rational, Rational>> base,
                                                std::vector<Rational> shifts) {
    if (z <= 0) throw input_error("circumference must be positive");
    for (const auto& [a, b] : base)
        if (a < 0 || b <= a || b > z) throw input_error("interval [" + rat_str(a) + "," + rat_str(b) + ") not inside [0,z)");
    std::sort(base.begin(), base.end());
    for (std::size_t i = 0; i + 1 < base.size(); ++i)
        if (base[i + 1].first < base[i].second) throw input_error("base intervals overlap");
    std::vector<std::pair<Rational, Rational>> merged;
    for (auto& iv : base) {
        if (!merged.empty() && merged.back().second == iv.first)
            merged.back().second = iv.second;
        else
            merged.push_back(iv);
    }
    for (const auto& s : shifts)
        if (s < 0 || s >= z) throw input_error("shift " + rat_str(s) + " not in [0,z)");
    return {z, std::move(merged), std::move(shifts)};
}

/// Exact discretization: with D the lcm of all denominators (of z, interval
/// endpoints and shifts), every breakpoint lands on the 1/D grid, so the base
/// becomes a union of exactly D unit cells of Z_L, L = z*D, and the shifts
/// become elements of Z_L.  Density D/L = 1/z; no rounding occurs anywhere.
inline BaseCertificate discretize(const ContinuousGyrocoloring& c, std::string label = "") {
    if (c.base_length() != 1)
        throw input_error("base has total length " + rat_str(c.base_length()) + ", expected exactly 1");
    BigInt D = rat_den(c.z);
    auto fold = [&D](const Rational& r) { D = boost::multiprecision::lcm(D, rat_den(r)); };
    for (const auto& [a, b] : c.base) {
        fold(a);
        fold(b);
    }
    for (const auto& s : c.shifts) fold(s);

    Rational L_rat = c.z * Rational(D);
    if (rat_den(L_rat) != 1) throw std::logic_error("discretization grid did not produce an integer order");
    std::int64_t L = to_int64(rat_num(L_rat));
    std::int64_t Dconv = to_int64(D);

    BaseCertificate cert;
    cert.group = AbelianGroup({L});
    for (const auto& [a, b] : c.base) {
        std::int64_t lo = to_int64(rat_num(a * Rational(D)));
        std::int64_t hi = to_int64(rat_num(b * Rational(D)));
        for (std::int64_t x = lo; x < hi; ++x) cert.A.push_back({x});
    }
    if ((std::int64_t)cert.A.size() != Dconv) throw std::logic_error("discretized base does not cover D cells");
    cert.f.reserve(c.shifts.size());
    for (const auto& s : c.shifts) cert.f.push_back({to_int64(rat_num(s * Rational(D)))});
    cert.graph_label = std::move(label);
    cert.normalize();
    return cert;
}

/// Inverse direction of the discrete/continuous bridge: a Z_N certificate
/// with K base elements becomes a (N/K)-gyrocoloring whose base is the union
/// of the cells [x/K, (x+1)/K) for x in A, with shifts f(v)/K.
inline ContinuousGyrocoloring continuous_from_base(const BaseCertificate& cert) {
    if (cert.group.rank() != 1) throw input_error("continuous_from_base requires a single cyclic factor");
    if (cert.A.empty()) throw input_error("certificate base set is empty");
    std::int64_t N = cert.group.moduli[0];
    std::int64_t K = (std::int64_t)cert.A.size();
    std::vector<std::pair<Rational, Rational>> base;
    for (const auto& a : cert.A) base.emplace_back(Rational(a[0], K), Rational(a[0] + 1, K));
    std::vector<Rational> shifts;
    shifts.reserve(cert.f.size());
    for (const auto& fv : cert.f) shifts.push_back(Rational(fv[0], K));
    return make_gyrocoloring(Rational(N, K), std::move(base), std::move(shifts));
}

/// A gyrocoloring is valid exactly when its discretization is a valid base.
inline BaseValidity verify_gyrocoloring(const Graph& G, const ContinuousGyrocoloring& c) {
    if ((int)c.shifts.size() != G.n)
        throw input_error("gyrocoloring has " + std::to_string(c.shifts.size()) + " shifts, graph has " +
                          std::to_string(G.n) + " vertices");
    return verify_base(G, discretize(c, G.label));
}

} // namespace gyro
