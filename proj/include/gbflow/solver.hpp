#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "gbflow/catalog.hpp"
#include "gbflow/graph.hpp"
#include "gbflow/linalg.hpp"
#include "gbflow/pairs.hpp"

namespace gbflow {

/// minimize c.x subject to Ax = b, x in N^n on the tournament graph G_d.
struct FlowInstance {
    int d = 0;
    std::vector<long long> b;  // vertex supplies, length d
    RatVec c;                  // arc costs, length n
};

struct SolveOutcome {
    bool feasible = false;
    ExponentVec x;
    Rat objective;
    int violated_prefix = -1;      // 1-based prefix index certifying infeasibility
    std::size_t pairs_examined = 0;
};

namespace detail {

inline void check_instance(const FlowInstance& inst) {
    TournamentGraph g(inst.d);
    if (inst.b.size() != static_cast<std::size_t>(inst.d))
        throw invalid_dimension_error("supply vector has wrong length");
    if (inst.c.size() != static_cast<std::size_t>(g.arc_count()))
        throw invalid_dimension_error("cost vector has wrong length");
}

inline Rat objective_of(const RatVec& c, const ExponentVec& x) {
    Rat s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (x[i] != 0) s += c[i] * x[i];
    return s;
}

inline TermOrder refined_order(const TournamentGraph& g, const RatVec& c) {
    TermOrder o(c);
    o.set_grading(length_grading(g));
    return o;
}

}  // namespace detail

/// Greedy construction routing each deficit from the earliest remaining
/// surplus. Feasible iff the supplies sum to zero and every prefix sum is
/// nonnegative (all arcs point forward).
inline SolveOutcome feasible_flow(const FlowInstance& inst) {
    detail::check_instance(inst);
    TournamentGraph g(inst.d);
    SolveOutcome out;
    out.x = ExponentVec(static_cast<std::size_t>(g.arc_count()));
    long long prefix = 0;
    for (int i = 0; i < inst.d; ++i) {
        prefix += inst.b[static_cast<std::size_t>(i)];
        const bool last = i == inst.d - 1;
        if (prefix < 0 || (last && prefix != 0)) {
            out.violated_prefix = i + 1;
            return out;
        }
    }
    std::vector<long long> surplus(inst.b);
    for (int j = 0; j < inst.d; ++j) {
        long long need = -surplus[static_cast<std::size_t>(j)];
        for (int i = 0; i < j && need > 0; ++i) {
            long long take = std::min(need, surplus[static_cast<std::size_t>(i)]);
            if (take <= 0) continue;
            out.x[static_cast<std::size_t>(g.arc_index(i + 1, j + 1))] += take;
            surplus[static_cast<std::size_t>(i)] -= take;
            need -= take;
        }
    }
    out.feasible = true;
    out.objective = detail::objective_of(inst.c, out.x);
    return out;
}

/// Normal form of any feasible point with respect to the reduced GB of the
/// refined order: the fixed point is the order-minimal lattice point.
inline SolveOutcome conti_traverso(const FlowInstance& inst,
                                   int cap = kDefaultEnumerationCap) {
    SolveOutcome out = feasible_flow(inst);
    if (!out.feasible) return out;
    TournamentGraph g(inst.d);
    auto gb = gb_from_universal(circuit_binomials(g, cap),
                                detail::refined_order(g, inst.c));
    out.x = normal_form(out.x, gb);
    out.objective = detail::objective_of(inst.c, out.x);
    return out;
}

namespace detail {

/// Exact solution of the tree system: flows supported on the spanning tree
/// sigma meeting supplies b; empty when non-integral or negative.
inline std::optional<ExponentVec> tree_solution(const TournamentGraph& g,
                                                const std::vector<int>& sigma,
                                                const std::vector<long long>& b) {
    const int d = g.vertex_count();
    RatMat m(static_cast<std::size_t>(d - 1), RatVec(sigma.size(), Rat(0)));
    auto inc = incidence_matrix(g);
    for (int r = 0; r < d - 1; ++r)
        for (std::size_t j = 0; j < sigma.size(); ++j)
            m[static_cast<std::size_t>(r)][j] =
                inc.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(sigma[j])];
    RatVec rhs(b.begin(), b.end() - 1);
    auto sol = solve_linear(m, rhs);
    if (sol.status != SolveStatus::unique) return std::nullopt;
    ExponentVec x(static_cast<std::size_t>(g.arc_count()));
    for (std::size_t j = 0; j < sigma.size(); ++j) {
        const Rat& v = sol.solution[j];
        if (v < 0 || !is_integral(v)) return std::nullopt;
        x[static_cast<std::size_t>(sigma[j])] = static_cast<Expo>(rat_num(v));
    }
    return x;
}

}  // namespace detail

/// Walks the standard pairs (ascending by certificate objective y.b) and
/// returns the first tree system with an integral nonnegative solution; any
/// such solution is optimal by complementary slackness with the certificate.
inline SolveOutcome solve_by_standard_pairs(const FlowInstance& inst,
                                            int cap = kDefaultEnumerationCap) {
    detail::check_instance(inst);
    SolveOutcome probe = feasible_flow(inst);
    if (!probe.feasible) return probe;
    TournamentGraph g(inst.d);
    auto pairs = standard_pairs_primal(g, detail::refined_order(g, inst.c), cap);
    std::vector<std::pair<Rat, std::size_t>> ordered;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        RatVec y = tree_potentials(g, pairs[i].sigma, inst.c);
        Rat obj = 0;
        for (int v = 0; v < inst.d; ++v)
            obj += y[static_cast<std::size_t>(v)] * inst.b[static_cast<std::size_t>(v)];
        ordered.emplace_back(obj, i);
    }
    std::sort(ordered.begin(), ordered.end());
    SolveOutcome out;
    for (const auto& [obj, idx] : ordered) {
        ++out.pairs_examined;
        auto x = detail::tree_solution(g, pairs[idx].sigma, inst.b);
        if (!x) continue;
        out.feasible = true;
        out.x = std::move(*x);
        out.objective = detail::objective_of(inst.c, out.x);
        return out;
    }
    return out;  // no pair admits a lattice point: infeasible
}

/// Exhaustive baseline: every spanning tree's system, exact arithmetic, ties
/// broken toward the refined-order-minimal vector.
inline SolveOutcome oracle_optimum(const FlowInstance& inst, int cap = 7) {
    detail::check_instance(inst);
    SolveOutcome out = feasible_flow(inst);
    if (!out.feasible) return out;
    TournamentGraph g(inst.d);
    TermOrder order = detail::refined_order(g, inst.c);
    std::optional<ExponentVec> best;
    Rat best_obj;
    for_each_spanning_tree(
        g,
        [&](const std::vector<int>& t) {
            auto x = detail::tree_solution(g, t, inst.b);
            if (!x) return;
            Rat obj = detail::objective_of(inst.c, *x);
            if (!best || obj < best_obj ||
                (obj == best_obj && *x != *best &&
                 order.compare(*x, *best) == Cmp::less))
                best = std::move(x), best_obj = std::move(obj);
        },
        cap);
    // a feasible instance always has a tree (forest) optimum
    out.x = *best;
    out.objective = best_obj;
    return out;
}

/// Reduced cost of a maximal face sigma: b'_sigma = b_sigma - N1^T(B1^{-1})^T b_sbar
/// where B1, N1 split the fundamental circuit matrix columns into the
/// complement of sigma and sigma itself.
struct ReducedCostResult {
    std::vector<int> sigma;
    RatVec values;  // indexed along sigma
};

inline ReducedCostResult reduced_cost(const TournamentGraph& g, const std::vector<int>& sigma,
                                      const RatVec& btilde) {
    const int n = g.arc_count();
    if (btilde.size() != static_cast<std::size_t>(n))
        throw invalid_dimension_error("reduced_cost: wrong cost length");
    auto f = fundamental_matrices(g);
    IntMat circ = f.circuit_matrix_arc_order();
    std::vector<bool> in_sigma(static_cast<std::size_t>(n), false);
    for (int a : sigma) in_sigma[static_cast<std::size_t>(a)] = true;
    std::vector<int> sbar;
    for (int a = 0; a < n; ++a)
        if (!in_sigma[static_cast<std::size_t>(a)]) sbar.push_back(a);
    if (sbar.size() != circ.size())
        throw invalid_basis_error("sigma is not a spanning tree complement split");
    // solve B1^T z = btilde_sbar
    RatMat bt(sbar.size(), RatVec(sbar.size()));
    RatVec rhs(sbar.size());
    for (std::size_t i = 0; i < sbar.size(); ++i) {
        for (std::size_t r = 0; r < circ.size(); ++r)
            bt[i][r] = circ[r][static_cast<std::size_t>(sbar[i])];
        rhs[i] = btilde[static_cast<std::size_t>(sbar[i])];
    }
    auto sol = solve_linear(bt, rhs);
    if (sol.status != SolveStatus::unique)
        throw invalid_basis_error("singular circuit block for sigma");
    ReducedCostResult res;
    res.sigma = sigma;
    for (int a : sigma) {
        Rat v = btilde[static_cast<std::size_t>(a)];
        for (std::size_t r = 0; r < circ.size(); ++r)
            v -= sol.solution[r] * circ[r][static_cast<std::size_t>(a)];
        res.values.push_back(std::move(v));
    }
    return res;
}

/// The proof identity for reduced costs: applying the fundamental cutset
/// columns of sigma to the values recovers the tree components of btilde.
inline bool reduced_cost_identity(const TournamentGraph& g, const ReducedCostResult& rc,
                                  const RatVec& btilde) {
    auto f = fundamental_matrices(g);
    IntMat cut = f.cutset_matrix_arc_order();
    for (std::size_t r = 0; r < cut.size(); ++r) {
        Rat s = 0;
        for (std::size_t j = 0; j < rc.sigma.size(); ++j)
            s += rc.values[j] * cut[r][static_cast<std::size_t>(rc.sigma[j])];
        if (s != btilde[static_cast<std::size_t>(f.tree[r])]) return false;
    }
    return true;
}

}  // namespace gbflow
