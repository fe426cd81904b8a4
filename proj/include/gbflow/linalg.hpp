#pragma once

#include <cstddef>
#include <vector>

#include "gbflow/numeric.hpp"

namespace gbflow {

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& x) {
    RatVec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], x);
    return r;
}

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    RatVec solution;            // a particular solution (free variables set to 0)
    std::vector<int> pivot_columns;
};

/// Exact Gaussian elimination on a (possibly rectangular) system ax = b.
inline LinearSolveResult solve_linear(RatMat a, RatVec b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw invalid_dimension_error("solve_linear: size mismatch");
    LinearSolveResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        const Rat inv = Rat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        res.pivot_columns.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) {
            res.status = SolveStatus::inconsistent;
            return res;
        }
    res.status = res.pivot_columns.size() == cols ? SolveStatus::unique
                                                  : SolveStatus::underdetermined;
    res.solution.assign(cols, Rat(0));
    for (std::size_t i = 0; i < res.pivot_columns.size(); ++i)
        res.solution[static_cast<std::size_t>(res.pivot_columns[i])] = b[i];
    return res;
}

struct LpResult {
    bool feasible = false;
    RatVec x;       // feasible point when feasible
    RatVec farkas;  // y with y.a <= 0 componentwise and y.b > 0 otherwise
};

/// Exact feasibility of {ax = b, x >= 0} by phase-one simplex with Bland's
/// rule; infeasible systems come back with a Farkas certificate.
inline LpResult lp_feasible(RatMat a, RatVec b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    if (b.size() != m) throw invalid_dimension_error("lp_feasible: size mismatch");
    std::vector<int> row_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            row_sign[i] = -1;
            b[i] = -b[i];
            for (auto& v : a[i]) v = -v;
        }
    // tableau columns: n originals, m artificials, rhs
    const std::size_t width = n + m + 1;
    RatMat t(m, RatVec(width, Rat(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = b[i];
        basis[i] = n + i;
    }
    // objective row: minimize sum of artificials; store -z row (reduced costs)
    RatVec obj(width, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) obj[j] -= t[i][j];
    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const Rat inv = Rat(1) / t[pr][pc];
        for (auto& v : t[pr]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pr || t[i][pc] == 0) continue;
            const Rat f = t[i][pc];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[pr][j];
        }
        if (obj[pc] != 0) {
            const Rat f = obj[pc];
            for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };
    for (;;) {
        // Bland: smallest-index entering column with negative reduced cost
        std::size_t pc = width;
        for (std::size_t j = 0; j < n + m; ++j)
            if (obj[j] < 0) {
                pc = j;
                break;
            }
        if (pc == width) break;
        std::size_t pr = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][pc] <= 0) continue;
            if (pr == m) {
                pr = i;
                continue;
            }
            const Rat cur = t[i][width - 1] / t[i][pc];
            const Rat best = t[pr][width - 1] / t[pr][pc];
            if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
        }
        if (pr == m) throw error("phase-one objective unbounded");  // cannot happen
        pivot(pr, pc);
    }
    LpResult res;
    // -z row rhs holds -objective value
    if (obj[width - 1] == 0) {
        res.feasible = true;
        res.x.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
        return res;
    }
    // y_i = (cost of artificial i) - (its reduced cost) = 1 - obj[n+i],
    // then undo the row sign flips
    res.farkas.assign(m, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
        res.farkas[i] = (Rat(1) - obj[n + i]) * row_sign[i];
    return res;
}

}  // namespace gbflow
