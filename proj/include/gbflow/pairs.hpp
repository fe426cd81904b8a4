#pragma once

#include <algorithm>
#include <vector>

#include "gbflow/algebra.hpp"
#include "gbflow/catalog.hpp"
#include "gbflow/graph.hpp"
#include "gbflow/linalg.hpp"

namespace gbflow {

/// (x^a, sigma): the monomials x^a * k[x_j : j in sigma], all standard.
/// For these ideals every root is 1, so the pair is its index set.
struct StandardPair {
    ExponentVec root;
    std::vector<int> sigma;  // sorted arc indices
    bool operator==(const StandardPair&) const = default;
};

inline std::size_t arithmetic_degree(const std::vector<StandardPair>& pairs) {
    return pairs.size();
}

namespace detail {

inline ExponentVec support_monomial(std::size_t n, const std::vector<int>& sigma) {
    ExponentVec m(n);
    for (int a : sigma) m[static_cast<std::size_t>(a)] = 1;
    return m;
}

}  // namespace detail

/// Pairs (1, T) over spanning trees T whose support monomial x^T is standard.
inline std::vector<StandardPair> standard_pairs_primal(const TournamentGraph& g,
                                                       const TermOrder& order,
                                                       int cap = kDefaultEnumerationCap) {
    auto gb = gb_from_universal(circuit_binomials(g, cap), order);
    MonomialIdeal in = initial_ideal(gb);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    std::vector<StandardPair> pairs;
    for_each_spanning_tree(
        g,
        [&](const std::vector<int>& t) {
            if (is_standard(detail::support_monomial(n, t), in))
                pairs.push_back({ExponentVec(n), t});
        },
        cap);
    return pairs;
}

/// Pairs (1, sigma) over co-trees (complements of spanning trees) with x^sigma
/// standard for the dual initial ideal.
inline std::vector<StandardPair> standard_pairs_dual(const TournamentGraph& g,
                                                     const RatVec& btilde,
                                                     int cap = kDefaultEnumerationCap) {
    if (!validate_dual_cost(g, btilde).valid)
        throw order_error("dual cost admits no nonnegative potential");
    TermOrder order(btilde);
    order.set_certified(true);
    auto gb = gb_from_universal(cutset_binomials(g, cap), order);
    MonomialIdeal in = initial_ideal(gb);
    const std::size_t n = static_cast<std::size_t>(g.arc_count());
    std::vector<StandardPair> pairs;
    for_each_spanning_tree(
        g,
        [&](const std::vector<int>& t) {
            std::vector<int> cotree;
            std::vector<bool> used(n, false);
            for (int a : t) used[static_cast<std::size_t>(a)] = true;
            for (int a = 0; a < g.arc_count(); ++a)
                if (!used[static_cast<std::size_t>(a)]) cotree.push_back(a);
            if (is_standard(detail::support_monomial(n, cotree), in))
                pairs.push_back({ExponentVec(n), cotree});
        },
        cap);
    std::sort(pairs.begin(), pairs.end(),
              [](const StandardPair& a, const StandardPair& b) { return a.sigma < b.sigma; });
    return pairs;
}

/// Vertex potentials y with y_d = 0 and y_i - y_j = c_{i,j} on tree arcs.
inline RatVec tree_potentials(const TournamentGraph& g, const std::vector<int>& tree,
                              const RatVec& c) {
    const int d = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(d + 1));
    for (int a : tree) {
        adj[static_cast<std::size_t>(g.arc(a).tail)].push_back({g.arc(a).head, a});
        adj[static_cast<std::size_t>(g.arc(a).head)].push_back({g.arc(a).tail, a});
    }
    RatVec y(static_cast<std::size_t>(d), Rat(0));
    std::vector<bool> seen(static_cast<std::size_t>(d + 1), false);
    std::vector<int> stack{d};
    seen[static_cast<std::size_t>(d)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, a] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            const Rat ca = c[static_cast<std::size_t>(a)];
            if (g.arc(a).tail == w)
                y[static_cast<std::size_t>(w - 1)] = y[static_cast<std::size_t>(v - 1)] + ca;
            else
                y[static_cast<std::size_t>(w - 1)] = y[static_cast<std::size_t>(v - 1)] - ca;
            stack.push_back(w);
        }
    }
    return y;
}

struct TriangulationFace {
    std::vector<int> sigma;
    RatVec certificate;  // potentials y, y_d = 0
    bool strict = false;
};

struct TriangulationResult {
    std::vector<TriangulationFace> faces;
    bool generic = true;
};

/// Maximal faces of the regular triangulation induced by c. A spanning tree T
/// is a face when its potentials satisfy y_i - y_j < c_{i,j} on every chord.
/// A tie makes c non-generic; we then fall back to the refined order's
/// standard-monomial definition for the face set.
inline TriangulationResult triangulation_faces(const TournamentGraph& g, const RatVec& c,
                                               int cap = kDefaultEnumerationCap) {
    TriangulationResult res;
    for_each_spanning_tree(
        g,
        [&](const std::vector<int>& t) {
            RatVec y = tree_potentials(g, t, c);
            bool weak = true, strict = true;
            std::vector<bool> used(static_cast<std::size_t>(g.arc_count()), false);
            for (int a : t) used[static_cast<std::size_t>(a)] = true;
            for (int a = 0; a < g.arc_count() && weak; ++a) {
                if (used[static_cast<std::size_t>(a)]) continue;
                const Rat slack = c[static_cast<std::size_t>(a)] -
                                  (y[static_cast<std::size_t>(g.arc(a).tail - 1)] -
                                   y[static_cast<std::size_t>(g.arc(a).head - 1)]);
                if (slack < 0) weak = false;
                if (slack == 0) strict = false;
            }
            if (weak && !strict) res.generic = false;
            if (weak && strict) res.faces.push_back({t, std::move(y), true});
        },
        cap);
    if (!res.generic) {
        res.faces.clear();
        for (const auto& p : standard_pairs_primal(g, TermOrder(c), cap)) {
            RatVec y = tree_potentials(g, p.sigma, c);
            bool strict = true;
            std::vector<bool> used(static_cast<std::size_t>(g.arc_count()), false);
            for (int a : p.sigma) used[static_cast<std::size_t>(a)] = true;
            for (int a = 0; a < g.arc_count(); ++a) {
                if (used[static_cast<std::size_t>(a)]) continue;
                if (c[static_cast<std::size_t>(a)] ==
                    y[static_cast<std::size_t>(g.arc(a).tail - 1)] -
                        y[static_cast<std::size_t>(g.arc(a).head - 1)])
                    strict = false;
            }
            res.faces.push_back({p.sigma, std::move(y), strict});
        }
    }
    return res;
}

/// Border the matrix with a top row of ones and a final unit column.
inline IntMat homogenize(const IntMat& a) {
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    IntMat h;
    h.push_back(IntRow(cols + 1, 1));
    for (const auto& row : a) {
        IntRow r = row;
        r.push_back(0);
        h.push_back(std::move(r));
    }
    return h;
}

inline constexpr int kHomogenizedCap = 4;

/// Maximal faces of the regular triangulation of the homogenized matrix under
/// weight (c, 0), by exhaustive subset search with exact certificates. The
/// columns lack graph structure, hence the small cap.
inline std::vector<std::vector<int>> homogenized_triangulation_faces(const TournamentGraph& g,
                                                                     const RatVec& c) {
    const int d = g.vertex_count();
    if (d > kHomogenizedCap)
        throw resource_error("homogenized face search capped at d <= " +
                             std::to_string(kHomogenizedCap));
    IntMat ap = homogenize(reduce_rows(incidence_matrix(g)));
    const int rows = d;  // (d-1) + ones row
    const int cols = g.arc_count() + 1;
    RatVec w(c);
    w.push_back(0);
    std::vector<std::vector<int>> faces;
    std::vector<int> tau;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(tau.size()) == rows) {
            // solve (A'_tau)^T y = w_tau
            RatMat m(tau.size(), RatVec(static_cast<std::size_t>(rows)));
            RatVec rhs(tau.size());
            for (std::size_t i = 0; i < tau.size(); ++i) {
                for (int r = 0; r < rows; ++r)
                    m[i][static_cast<std::size_t>(r)] =
                        ap[static_cast<std::size_t>(r)][static_cast<std::size_t>(tau[i])];
                rhs[i] = w[static_cast<std::size_t>(tau[i])];
            }
            auto sol = solve_linear(m, rhs);
            if (sol.status == SolveStatus::unique) {
                bool ok = true;
                for (int j = 0; j < cols && ok; ++j) {
                    if (std::find(tau.begin(), tau.end(), j) != tau.end()) continue;
                    Rat v = 0;
                    for (int r = 0; r < rows; ++r)
                        v += sol.solution[static_cast<std::size_t>(r)] *
                             ap[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    if (!(v < w[static_cast<std::size_t>(j)])) ok = false;
                }
                if (ok) faces.push_back(tau);
            }
            return;
        }
        for (int j = next; j <= cols - (rows - static_cast<int>(tau.size())); ++j) {
            tau.push_back(j);
            rec(j + 1);
            tau.pop_back();
        }
    };
    rec(0);
    return faces;
}

struct HomogReport {
    bool bijection = false;
    bool generic = false;  // the correspondence is only promised for generic costs
    std::size_t primal_count = 0;
    std::size_t homog_with_last = 0;     // faces containing column n+1
    std::size_t homog_without_last = 0;  // faces missing it (no primal partner)
};

/// Both directions of the correspondence between primal standard pairs (1,s)
/// and homogenized pairs (1, s u {n+1}).
inline HomogReport verify_homog_correspondence(const TournamentGraph& g, const RatVec& c) {
    const int last = g.arc_count();
    auto primal = standard_pairs_primal(g, TermOrder(c));
    auto homog = homogenized_triangulation_faces(g, c);
    HomogReport rep;
    rep.generic = triangulation_faces(g, c).generic;
    rep.primal_count = primal.size();
    std::vector<std::vector<int>> stripped;
    for (const auto& tau : homog) {
        if (std::find(tau.begin(), tau.end(), last) != tau.end()) {
            ++rep.homog_with_last;
            std::vector<int> s(tau.begin(), tau.end() - 1);
            stripped.push_back(std::move(s));
        } else {
            ++rep.homog_without_last;
        }
    }
    std::vector<std::vector<int>> sigmas;
    for (const auto& p : primal) sigmas.push_back(p.sigma);
    std::sort(sigmas.begin(), sigmas.end());
    std::sort(stripped.begin(), stripped.end());
    rep.bijection = sigmas == stripped;
    return rep;
}

/// Spanning trees avoiding both forbidden patterns: (a) consecutive arcs
/// (i,j),(j,k); (b) nested-crossing arcs (i,k),(j,l) with i<j<k<l.
inline long long count_pattern_trees(const TournamentGraph& g,
                                     int cap = kDefaultEnumerationCap) {
    long long count = 0;
    for_each_spanning_tree(
        g,
        [&](const std::vector<int>& t) {
            for (std::size_t x = 0; x < t.size(); ++x)
                for (std::size_t y = 0; y < t.size(); ++y) {
                    if (x == y) continue;
                    const Arc& a = g.arc(t[x]);
                    const Arc& b = g.arc(t[y]);
                    if (a.head == b.tail) return;                              // (a)
                    if (a.tail < b.tail && b.tail < a.head && a.head < b.head) // (b)
                        return;
                }
            ++count;
        },
        cap);
    return count;
}

struct MaxDegreeReport {
    Int catalan = 0;
    std::size_t degree_type1 = 0;
    long long pattern_trees = 0;
    bool equal = false;
};

/// The maximum arithmetic degree: under a type-1 cost it is attained and
/// equals the Catalan number C_{d-1}, which also counts the pattern trees.
inline MaxDegreeReport max_arith_degree_check(int d, int cap = kDefaultEnumerationCap) {
    TournamentGraph g(d);
    MaxDegreeReport rep;
    rep.catalan = catalan_number(d - 1);
    rep.degree_type1 = arithmetic_degree(standard_pairs_primal(g, TermOrder(cost_type1(d).values), cap));
    rep.pattern_trees = count_pattern_trees(g, cap);
    rep.equal = Int(rep.degree_type1) == rep.catalan && Int(rep.pattern_trees) == rep.catalan;
    return rep;
}

}  // namespace gbflow
