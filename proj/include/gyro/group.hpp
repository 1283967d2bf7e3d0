#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gyro/errors.hpp"

namespace gyro {

using GroupElement = std::vector<std::int64_t>; // residues, residues[i] in [0, m_i)

/// Finite abelian group given as a product of cyclic factors Z_{m1} x ... x Z_{md}.
/// Elements are residue vectors; the element <-> index bijection is mixed-radix
/// with the first coordinate most significant.
struct AbelianGroup {
    std::vector<std::int64_t> moduli;
    std::int64_t order = 0;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<std::int64_t> m) : moduli(std::move(m)) {
        if (moduli.empty()) throw input_error("abelian group needs at least one factor");
        order = 1;
        for (auto mi : moduli) {
            if (mi < 2) throw input_error("cyclic factor must have order >= 2");
            if (order > (std::int64_t(1) << 40) / mi)
                throw input_error("group order too large");
            order *= mi;
        }
    }

    std::size_t rank() const { return moduli.size(); }

    std::int64_t index_of(const GroupElement& x) const {
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < moduli.size(); ++i) idx = idx * moduli[i] + x[i];
        return idx;
    }

    GroupElement element_at(std::int64_t idx) const {
        GroupElement x(moduli.size());
        for (std::size_t i = moduli.size(); i-- > 0;) {
            x[i] = idx % moduli[i];
            idx /= moduli[i];
        }
        return x;
    }

    bool reduced(const GroupElement& x) const {
        if (x.size() != moduli.size()) return false;
        for (std::size_t i = 0; i < moduli.size(); ++i)
            if (x[i] < 0 || x[i] >= moduli[i]) return false;
        return true;
    }

    GroupElement reduce(GroupElement x) const {
        if (x.size() != moduli.size()) throw input_error("element rank does not match group");
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            x[i] %= moduli[i];
            if (x[i] < 0) x[i] += moduli[i];
        }
        return x;
    }

    GroupElement add(const GroupElement& a, const GroupElement& b) const {
        GroupElement c(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = (a[i] + b[i]) % moduli[i];
        return c;
    }

    GroupElement sub(const GroupElement& a, const GroupElement& b) const {
        GroupElement c(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = (a[i] - b[i] + moduli[i]) % moduli[i];
        return c;
    }

    GroupElement neg(const GroupElement& a) const {
        GroupElement c(moduli.size());
        for (std::size_t i = 0; i < moduli.size(); ++i) c[i] = a[i] ? moduli[i] - a[i] : 0;
        return c;
    }

    GroupElement zero() const { return GroupElement(moduli.size(), 0); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < moduli.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(moduli[i]);
        }
        return s;
    }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.moduli == b.moduli; }
};

/// Symmetric connection set: S = -S and 0 not in S.  Stored as sorted element
/// indices of the ambient group.
struct ConnectionSet {
    AbelianGroup group;
    std::vector<std::int64_t> indices; // sorted, deduplicated

    ConnectionSet() = default;

    ConnectionSet(AbelianGroup g, const std::vector<GroupElement>& elements) : group(std::move(g)) {
        for (const auto& e : elements) {
            if (!group.reduced(e)) throw input_error("connection set element not reduced for group " + group.str());
            indices.push_back(group.index_of(e));
        }
        normalize_and_check();
    }

    static ConnectionSet from_indices(AbelianGroup g, std::vector<std::int64_t> idx) {
        ConnectionSet s;
        s.group = std::move(g);
        s.indices = std::move(idx);
        s.normalize_and_check();
        return s;
    }

    bool contains(std::int64_t idx) const {
        return std::binary_search(indices.begin(), indices.end(), idx);
    }

    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(indices.size());
        for (auto i : indices) out.push_back(group.element_at(i));
        return out;
    }

  private:
    void normalize_and_check() {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        for (auto i : indices) {
            if (i < 0 || i >= group.order) throw input_error("connection set index out of range");
            if (i == 0) throw input_error("connection set contains the identity");
            auto e = group.element_at(i);
            if (!contains(group.index_of(group.neg(e))))
                throw input_error("connection set is not symmetric (missing inverse of element at index " +
                                  std::to_string(i) + ")");
        }
    }
};

/// Group automorphisms generated by coordinatewise unit multiplication and
/// permutations of equal-moduli factors, as index permutations.  This is in
/// general a subgroup of the full automorphism group, which is all the
/// connection-set canonicalization needs (soundness over completeness).
inline std::vector<std::vector<std::int64_t>> unit_automorphisms(const AbelianGroup& Z,
                                                                 std::size_t max_count = 1 << 12) {
    std::size_t d = Z.rank();

    std::vector<std::vector<std::int64_t>> units(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::int64_t u = 1; u < Z.moduli[i]; ++u)
            if (std::gcd(u, Z.moduli[i]) == 1) units[i].push_back(u);

    // factor permutations respecting moduli
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i) ok = Z.moduli[perm[i]] == Z.moduli[i];
        if (ok) perms.push_back(perm);
        if (perms.size() > max_count) break;
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t unit_total = 1;
    for (auto& u : units) unit_total *= u.size();
    if (unit_total * perms.size() > max_count || unit_total * perms.size() * Z.order > (std::size_t(1) << 26)) {
        // too many to materialize; identity-only canonicalization is still sound
        std::vector<std::int64_t> id(Z.order);
        std::iota(id.begin(), id.end(), 0);
        return {id};
    }

    std::vector<std::vector<std::int64_t>> autos;
    std::vector<std::size_t> pick(d, 0);
    while (true) {
        for (const auto& p : perms) {
            std::vector<std::int64_t> map(Z.order);
            for (std::int64_t idx = 0; idx < Z.order; ++idx) {
                GroupElement x = Z.element_at(idx);
                GroupElement y(d);
                for (std::size_t i = 0; i < d; ++i) y[i] = (units[p[i]][pick[p[i]]] * x[p[i]]) % Z.moduli[i];
                map[idx] = Z.index_of(y);
            }
            autos.push_back(std::move(map));
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++pick[i] < units[i].size()) break;
            pick[i] = 0;
        }
        if (i == d) break;
    }
    return autos;
}

inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

/// Primes in the open interval (lo, hi).
inline std::vector<std::int64_t> primes_in_window(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = lo + 1; p < hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw input_error("element not invertible in Z_" + std::to_string(m));
    return ((t % m) + m) % m;
}

} // namespace gyro
