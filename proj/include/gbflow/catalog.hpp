#pragma once

#include <string>
#include <vector>

#include "gbflow/algebra.hpp"
#include "gbflow/graph.hpp"
#include "gbflow/linalg.hpp"

namespace gbflow {

enum class CostKind { type1, type2, type3, dual_decreasing, custom };

struct CostVector {
    RatVec values;  // canonical arc order
    CostKind kind = CostKind::custom;
};

namespace detail {

inline Rat cost_at(const TournamentGraph& g, const RatVec& c, int i, int j) {
    return c[static_cast<std::size_t>(g.arc_index(i, j))];
}

}  // namespace detail

/// Triangle inequality plus the quadrilateral condition
/// c_{i,k}+c_{j,l} > c_{i,l}+c_{j,k}.
inline bool validate_type1(const TournamentGraph& g, const RatVec& c) {
    const int d = g.vertex_count();
    auto at = [&](int i, int j) { return detail::cost_at(g, c, i, j); };
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k) {
                if (!(at(i, j) + at(j, k) > at(i, k))) return false;
                for (int l = k + 1; l <= d; ++l)
                    if (!(at(i, k) + at(j, l) > at(i, l) + at(j, k))) return false;
            }
    return true;
}

/// Triangle inequality plus the reversed quadrilateral condition
/// c_{i,l}+c_{j,k} > c_{i,k}+c_{j,l}.
inline bool validate_type2(const TournamentGraph& g, const RatVec& c) {
    const int d = g.vertex_count();
    auto at = [&](int i, int j) { return detail::cost_at(g, c, i, j); };
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k) {
                if (!(at(i, j) + at(j, k) > at(i, k))) return false;
                for (int l = k + 1; l <= d; ++l)
                    if (!(at(i, l) + at(j, k) > at(i, k) + at(j, l))) return false;
            }
    return true;
}

/// Every chord strictly dearer than the tree path beneath it.
inline bool validate_type3(const TournamentGraph& g, const RatVec& c) {
    const int d = g.vertex_count();
    auto at = [&](int i, int j) { return detail::cost_at(g, c, i, j); };
    for (int i = 1; i <= d; ++i)
        for (int j = i + 2; j <= d; ++j) {
            Rat path = 0;
            for (int m = i; m < j; ++m) path += at(m, m + 1);
            if (!(at(i, j) > path)) return false;
        }
    return true;
}

struct DualCostReport {
    bool valid = false;
    RatVec witness;  // a >= 0 with (M I)a = b_tree, in split column order
};

/// Feasibility test for a dual weight vector: the fundamental cutset system
/// (M I)x = b restricted to tree arcs must admit a nonnegative solution.
/// Chord components of b must be zero for the certificate argument to apply.
inline DualCostReport validate_dual_cost(const TournamentGraph& g, const RatVec& b) {
    if (b.size() != static_cast<std::size_t>(g.arc_count()))
        throw invalid_dimension_error("dual cost has wrong length");
    auto f = fundamental_matrices(g);
    for (int a : f.chords)
        if (b[static_cast<std::size_t>(a)] != 0)
            throw invalid_input_error("dual cost must vanish on chords");
    RatMat m(f.cutset_matrix.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] = RatVec(f.cutset_matrix[i].begin(), f.cutset_matrix[i].end());
    RatVec rhs;
    for (int a : f.tree) rhs.push_back(b[static_cast<std::size_t>(a)]);
    auto lp = lp_feasible(m, rhs);
    DualCostReport rep;
    rep.valid = lp.feasible;
    if (lp.feasible) rep.witness = lp.x;
    return rep;
}

inline bool validate_dual_decreasing(const TournamentGraph& g, const RatVec& b) {
    const int d = g.vertex_count();
    for (int i = 1; i + 1 < d; ++i)
        if (!(detail::cost_at(g, b, i, i + 1) > detail::cost_at(g, b, i + 1, i + 2)))
            return false;
    for (const Arc& a : g.arcs())
        if (a.head != a.tail + 1 &&
            b[static_cast<std::size_t>(g.arc_index(a.tail, a.head))] != 0)
            return false;
    return validate_dual_cost(g, b).valid;
}

namespace detail {

inline CostVector checked(RatVec v, CostKind kind, bool ok) {
    if (!ok) throw error("generated cost vector failed its own hypothesis check");
    return {std::move(v), kind};
}

}  // namespace detail

inline CostVector cost_type1(int d) {
    TournamentGraph g(d);
    RatVec v;
    for (const Arc& a : g.arcs()) {
        const long long s = a.head - a.tail;
        v.emplace_back(s * (2 * d - s));
    }
    const bool ok = d < 3 || validate_type1(g, v);
    return detail::checked(std::move(v), CostKind::type1, ok);
}

inline CostVector cost_type2(int d) {
    TournamentGraph g(d);
    RatVec v;
    for (const Arc& a : g.arcs()) {
        const long long s = a.head - a.tail;
        v.emplace_back(s * s + static_cast<long long>(d) * d);
    }
    const bool ok = d < 3 || validate_type2(g, v);
    return detail::checked(std::move(v), CostKind::type2, ok);
}

inline CostVector cost_type3(int d) {
    TournamentGraph g(d);
    RatVec v;
    for (const Arc& a : g.arcs()) {
        const long long s = a.head - a.tail;
        v.emplace_back(s == 1 ? 1 : s * s);
    }
    const bool ok = d < 3 || validate_type3(g, v);
    return detail::checked(std::move(v), CostKind::type3, ok);
}

inline CostVector dual_cost_decreasing(int d) {
    TournamentGraph g(d);
    RatVec v;
    for (const Arc& a : g.arcs())
        v.emplace_back(a.head == a.tail + 1 ? 2 * (d - a.tail) : 0);
    const bool ok = validate_dual_decreasing(g, v);
    return detail::checked(std::move(v), CostKind::dual_decreasing, ok);
}

/// {x_{i,j}x_{j,k} - x_{i,k}} u {x_{i,k}x_{j,l} - x_{i,l}x_{j,k}}; leads first.
inline std::vector<MarkedBinomial> gb_type1(int d) {
    std::vector<MarkedBinomial> out;
    if (d < 3) return out;
    TournamentGraph g(d);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    auto var = [&](int i, int j) { return static_cast<std::size_t>(g.arc_index(i, j)); };
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k) {
                MarkedBinomial b{ExponentVec(n), ExponentVec(n)};
                b.lead[var(i, j)] = 1;
                b.lead[var(j, k)] = 1;
                b.trail[var(i, k)] = 1;
                out.push_back(std::move(b));
                for (int l = k + 1; l <= d; ++l) {
                    MarkedBinomial q{ExponentVec(n), ExponentVec(n)};
                    q.lead[var(i, k)] = 1;
                    q.lead[var(j, l)] = 1;
                    q.trail[var(i, l)] = 1;
                    q.trail[var(j, k)] = 1;
                    out.push_back(std::move(q));
                }
            }
    return out;
}

/// Same triangles; quadrilaterals flipped: x_{i,l}x_{j,k} - x_{i,k}x_{j,l}.
inline std::vector<MarkedBinomial> gb_type2(int d) {
    std::vector<MarkedBinomial> out;
    if (d < 3) return out;
    TournamentGraph g(d);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    auto var = [&](int i, int j) { return static_cast<std::size_t>(g.arc_index(i, j)); };
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            for (int k = j + 1; k <= d; ++k) {
                MarkedBinomial b{ExponentVec(n), ExponentVec(n)};
                b.lead[var(i, j)] = 1;
                b.lead[var(j, k)] = 1;
                b.trail[var(i, k)] = 1;
                out.push_back(std::move(b));
                for (int l = k + 1; l <= d; ++l) {
                    MarkedBinomial q{ExponentVec(n), ExponentVec(n)};
                    q.lead[var(i, l)] = 1;
                    q.lead[var(j, k)] = 1;
                    q.trail[var(i, k)] = 1;
                    q.trail[var(j, l)] = 1;
                    out.push_back(std::move(q));
                }
            }
    return out;
}

/// {x_{i,j} - x_{i,i+1}...x_{j-1,j} | j > i+1}: the fundamental circuits of
/// the path tree, chords leading.
inline std::vector<MarkedBinomial> gb_type3(int d) {
    std::vector<MarkedBinomial> out;
    if (d < 3) return out;
    TournamentGraph g(d);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    auto var = [&](int i, int j) { return static_cast<std::size_t>(g.arc_index(i, j)); };
    for (int i = 1; i <= d; ++i)
        for (int j = i + 2; j <= d; ++j) {
            MarkedBinomial b{ExponentVec(n), ExponentVec(n)};
            b.lead[var(i, j)] = 1;
            for (int m = i; m < j; ++m) b.trail[var(m, m + 1)] = 1;
            out.push_back(std::move(b));
        }
    return out;
}

/// {g_i = prod_{j<i} x_{j,i} - prod_{k>i} x_{i,k} | i = 2..d}; g_d trails 1.
inline std::vector<MarkedBinomial> dual_gb(int d) {
    TournamentGraph g(d);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    auto var = [&](int i, int j) { return static_cast<std::size_t>(g.arc_index(i, j)); };
    std::vector<MarkedBinomial> out;
    for (int i = 2; i <= d; ++i) {
        MarkedBinomial b{ExponentVec(n), ExponentVec(n)};
        for (int j = 1; j < i; ++j) b.lead[var(j, i)] = 1;
        for (int k = i + 1; k <= d; ++k) b.trail[var(i, k)] = 1;
        out.push_back(std::move(b));
    }
    return out;
}

enum class CatalogKind { type1, type2, type3, dual };

struct CatalogReport {
    bool equal = false;
    std::size_t closed_form_size = 0;
    std::size_t engine_size = 0;
};

/// Recomputes the reduced GB with the engine under the generated cost and
/// checks marked-set equality with the closed form.
inline CatalogReport verify_catalog(int d, CatalogKind which) {
    TournamentGraph g(d);
    std::vector<MarkedBinomial> closed, universal;
    CostVector cost;
    switch (which) {
        case CatalogKind::type1:
            closed = gb_type1(d);
            cost = cost_type1(d);
            universal = circuit_binomials(g);
            break;
        case CatalogKind::type2:
            closed = gb_type2(d);
            cost = cost_type2(d);
            universal = circuit_binomials(g);
            break;
        case CatalogKind::type3:
            closed = gb_type3(d);
            cost = cost_type3(d);
            universal = circuit_binomials(g);
            break;
        case CatalogKind::dual:
            closed = dual_gb(d);
            cost = dual_cost_decreasing(d);
            universal = cutset_binomials(g);
            break;
    }
    TermOrder order(cost.values);
    auto engine = gb_from_universal(universal, order);
    std::sort(closed.begin(), closed.end(), binomial_less);
    CatalogReport rep;
    rep.closed_form_size = closed.size();
    rep.engine_size = engine.elements.size();
    rep.equal = closed == engine.elements;
    return rep;
}

}  // namespace gbflow
