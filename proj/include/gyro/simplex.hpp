#pragma once

#include <vector>

#include "gyro/errors.hpp"
#include "gyro/rational.hpp"

namespace gyro {

struct SimplexResult {
    Rational value;
    std::vector<Rational> primal; // optimal x
    std::vector<Rational> dual;   // optimal dual y, one per constraint
    std::uint64_t pivots = 0;
};

/// Exact primal simplex for  max c.x  s.t.  A x <= b, x >= 0  with b >= 0
/// (the slack basis is then feasible).  Bland's rule on both the entering and
/// leaving choice, so the method cannot cycle; arithmetic is exact rational
/// throughout.  Duals are read off the slack columns of the objective row.
inline SimplexResult simplex_max(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                 const std::vector<Rational>& c, Budget* budget = nullptr) {
    const int m = (int)A.size();
    const int n = (int)c.size();
    for (const auto& row : A)
        if ((int)row.size() != n) throw input_error("simplex: ragged constraint matrix");
    if ((int)b.size() != m) throw input_error("simplex: rhs size mismatch");
    for (const auto& bi : b)
        if (bi < 0) throw input_error("simplex: negative rhs not supported");

    const int cols = n + m + 1;
    std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols, Rational(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols - 1] = b[i];
    }
    for (int j = 0; j < n; ++j) T[m][j] = -c[j];

    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    SimplexResult res;
    while (true) {
        charge(budget);
        int enter = -1;
        for (int j = 0; j < n + m; ++j)
            if (T[m][j] < 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rational best_ratio(0);
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][cols - 1] / T[i][enter];
            if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("simplex: unbounded objective");

        // pivot on (leave, enter)
        Rational piv = T[leave][enter];
        for (int j = 0; j < cols; ++j) T[leave][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational factor = T[i][enter];
            for (int j = 0; j < cols; ++j) T[i][j] -= factor * T[leave][j];
        }
        basis[leave] = enter;
        ++res.pivots;
    }

    res.value = T[m][cols - 1];
    res.primal.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) res.primal[basis[i]] = T[i][cols - 1];
    res.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) res.dual[i] = T[m][n + i];
    return res;
}

/// Exact integer determinant by Bareiss fraction-free elimination.
inline BigInt exact_determinant(std::vector<std::vector<BigInt>> M) {
    const int n = (int)M.size();
    for (const auto& row : M)
        if ((int)row.size() != n) throw input_error("determinant: matrix not square");
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (M[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

} // namespace gyro
