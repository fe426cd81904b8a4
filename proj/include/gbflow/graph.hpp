#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "gbflow/monomial.hpp"
#include "gbflow/numeric.hpp"

namespace gbflow {

// d^{d-2} spanning trees and exponentially many circuits: enumeration is
// capped and callers must opt in above this.
inline constexpr int kDefaultEnumerationCap = 9;

struct Arc {
    int tail = 0;  // vertices are 1-based, tail < head
    int head = 0;
    bool operator==(const Arc&) const = default;
};

/// Complete acyclic digraph on vertices 1..d with every arc (i,j), i<j,
/// oriented forward. Arcs are kept in the canonical lexicographic order
/// (1,2),(1,3),...,(1,d),(2,3),...,(d-1,d); every vector in this library is
/// indexed by that order.
class TournamentGraph {
public:
    explicit TournamentGraph(int d) : d_(d) {
        if (d < 2) throw invalid_dimension_error("tournament graph requires d >= 2");
        arcs_.reserve(static_cast<std::size_t>(d) * (d - 1) / 2);
        for (int i = 1; i < d; ++i)
            for (int j = i + 1; j <= d; ++j) arcs_.push_back({i, j});
    }

    int vertex_count() const { return d_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int idx) const { return arcs_[static_cast<std::size_t>(idx)]; }

    int arc_index(int i, int j) const {
        // arcs with tail < i come first: (d-1) + (d-2) + ... + (d-i+1)
        return (i - 1) * d_ - i * (i - 1) / 2 + (j - i - 1);
    }

private:
    int d_;
    std::vector<Arc> arcs_;
};

using IntRow = std::vector<long long>;
using IntMat = std::vector<IntRow>;

/// d x n vertex-arc incidence matrix; column (i,j) has +1 at row i, -1 at row j.
struct IncidenceMatrix {
    IntMat entries;
};

inline IncidenceMatrix incidence_matrix(const TournamentGraph& g) {
    const int d = g.vertex_count();
    const int n = g.arc_count();
    IncidenceMatrix a{IntMat(d, IntRow(n, 0))};
    for (int k = 0; k < n; ++k) {
        a.entries[g.arc(k).tail - 1][k] = 1;
        a.entries[g.arc(k).head - 1][k] = -1;
    }
    return a;
}

/// First d-1 rows of A; the last flow-conservation constraint is redundant.
inline IntMat reduce_rows(const IncidenceMatrix& a) {
    return IntMat(a.entries.begin(), a.entries.end() - 1);
}

/// Signed incidence vector of a simple cycle; entries in {-1,0,+1}, sign
/// canonicalized so the lexicographically smallest arc in the support is +1.
struct CircuitVec {
    std::vector<int> coeff;
};

/// Incidence vector of the cutset for the partition (V+, V-) with 1 in V+.
struct CutsetVec {
    std::vector<int> coeff;
    std::vector<int> v_plus;  // sorted, always contains 1
};

namespace detail {

inline void check_cap(int d, int cap, const char* what) {
    if (d > cap)
        throw resource_error(std::string(what) + " enumeration capped at d <= " +
                             std::to_string(cap));
}

}  // namespace detail

/// One representative per undirected circuit;
/// count = sum_{k=3..d} binom(d,k) (k-1)!/2.
inline std::vector<CircuitVec> enumerate_circuits(const TournamentGraph& g,
                                                  int cap = kDefaultEnumerationCap) {
    const int d = g.vertex_count();
    detail::check_cap(d, cap, "circuit");
    std::vector<CircuitVec> out;
    std::vector<int> verts;
    // vertex subsets of size >= 3, smallest member first
    std::function<void(int, int)> subsets = [&](int next, int remaining) {
        if (remaining == 0) {
            std::vector<int> rest(verts.begin() + 1, verts.end());
            std::sort(rest.begin(), rest.end());
            do {
                // fix direction: second vertex smaller than last kills reflections
                if (rest.front() > rest.back()) continue;
                CircuitVec c{std::vector<int>(static_cast<std::size_t>(g.arc_count()), 0)};
                int prev = verts[0];
                auto step = [&](int v) {
                    if (prev < v)
                        c.coeff[static_cast<std::size_t>(g.arc_index(prev, v))] = 1;
                    else
                        c.coeff[static_cast<std::size_t>(g.arc_index(v, prev))] = -1;
                    prev = v;
                };
                for (int v : rest) step(v);
                step(verts[0]);
                out.push_back(std::move(c));
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int v = next; v + remaining <= d + 1; ++v) {
            verts.push_back(v);
            subsets(v + 1, remaining - 1);
            verts.pop_back();
        }
    };
    for (int k = 3; k <= d; ++k) {
        verts.clear();
        subsets(1, k);
    }
    return out;
}

/// One cutset per bipartition with 1 in V+; count = 2^{d-1} - 1.
inline std::vector<CutsetVec> enumerate_cutsets(const TournamentGraph& g,
                                                int cap = kDefaultEnumerationCap) {
    const int d = g.vertex_count();
    detail::check_cap(d, cap, "cutset");
    std::vector<CutsetVec> out;
    const unsigned total = 1u << (d - 1);
    for (unsigned mask = 1; mask < total; ++mask) {
        // mask bit (v-2) set means vertex v is in V-
        CutsetVec c;
        c.coeff.assign(static_cast<std::size_t>(g.arc_count()), 0);
        std::vector<bool> minus(static_cast<std::size_t>(d + 1), false);
        for (int v = 2; v <= d; ++v)
            if (mask & (1u << (v - 2))) minus[static_cast<std::size_t>(v)] = true;
        c.v_plus.push_back(1);
        for (int v = 2; v <= d; ++v)
            if (!minus[static_cast<std::size_t>(v)]) c.v_plus.push_back(v);
        for (int k = 0; k < g.arc_count(); ++k) {
            const Arc& a = g.arc(k);
            const bool tail_minus = minus[static_cast<std::size_t>(a.tail)];
            const bool head_minus = minus[static_cast<std::size_t>(a.head)];
            if (!tail_minus && head_minus)
                c.coeff[static_cast<std::size_t>(k)] = 1;
            else if (tail_minus && !head_minus)
                c.coeff[static_cast<std::size_t>(k)] = -1;
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

}  // namespace detail

/// Streams every spanning tree as a sorted list of arc indices; d^{d-2} total.
inline void for_each_spanning_tree(const TournamentGraph& g,
                                   const std::function<void(const std::vector<int>&)>& visit,
                                   int cap = kDefaultEnumerationCap) {
    const int d = g.vertex_count();
    detail::check_cap(d, cap, "spanning tree");
    const int n = g.arc_count();
    std::vector<int> chosen;
    std::function<void(int, const detail::Dsu&)> rec = [&](int next, const detail::Dsu& dsu) {
        if (static_cast<int>(chosen.size()) == d - 1) {
            visit(chosen);
            return;
        }
        const int need = d - 1 - static_cast<int>(chosen.size());
        for (int k = next; k + need <= n; ++k) {
            detail::Dsu copy = dsu;
            if (!copy.unite(g.arc(k).tail - 1, g.arc(k).head - 1)) continue;
            chosen.push_back(k);
            rec(k + 1, copy);
            chosen.pop_back();
        }
    };
    rec(0, detail::Dsu(d));
}

inline std::vector<std::vector<int>> enumerate_spanning_trees(
    const TournamentGraph& g, int cap = kDefaultEnumerationCap) {
    std::vector<std::vector<int>> out;
    for_each_spanning_tree(g, [&](const std::vector<int>& t) { out.push_back(t); }, cap);
    return out;
}

/// Fundamental cutset matrix (M I) and fundamental circuit matrix (I -M^T)
/// for the path tree {(i,i+1)}. Columns are in the split order x' (chords,
/// lexicographic) followed by x'' (tree arcs); column_arcs maps each column
/// back to its canonical arc index.
struct FundamentalMatrices {
    IntMat cutset_matrix;   // (d-1) x n
    IntMat circuit_matrix;  // (n-d+1) x n
    std::vector<int> tree;         // canonical arc indices of the path tree
    std::vector<int> chords;       // canonical arc indices of the non-tree arcs
    std::vector<int> column_arcs;  // split-order column -> canonical arc index

    /// Same matrix with columns permuted into canonical arc order.
    IntMat circuit_matrix_arc_order() const { return to_arc_order(circuit_matrix); }
    IntMat cutset_matrix_arc_order() const { return to_arc_order(cutset_matrix); }

private:
    IntMat to_arc_order(const IntMat& m) const {
        IntMat r(m.size(), IntRow(column_arcs.size(), 0));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < column_arcs.size(); ++j)
                r[i][static_cast<std::size_t>(column_arcs[j])] = m[i][j];
        return r;
    }
};

inline FundamentalMatrices fundamental_matrices(const TournamentGraph& g) {
    const int d = g.vertex_count();
    const int n = g.arc_count();
    FundamentalMatrices f;
    for (int k = 0; k < n; ++k) {
        if (g.arc(k).head == g.arc(k).tail + 1)
            f.tree.push_back(k);
        else
            f.chords.push_back(k);
    }
    f.column_arcs = f.chords;
    f.column_arcs.insert(f.column_arcs.end(), f.tree.begin(), f.tree.end());
    const int nc = static_cast<int>(f.chords.size());
    // row for tree arc (i,i+1): cutset ({1..i},{i+1..d}); chord (k,l) crosses iff k <= i < l
    f.cutset_matrix.assign(static_cast<std::size_t>(d - 1), IntRow(static_cast<std::size_t>(n), 0));
    for (int i = 1; i < d; ++i) {
        IntRow& row = f.cutset_matrix[static_cast<std::size_t>(i - 1)];
        for (int c = 0; c < nc; ++c) {
            const Arc& a = g.arc(f.chords[static_cast<std::size_t>(c)]);
            if (a.tail <= i && i < a.head) row[static_cast<std::size_t>(c)] = 1;
        }
        row[static_cast<std::size_t>(nc + i - 1)] = 1;
    }
    // row for chord (k,l): the chord plus the reversed tree path l -> k
    f.circuit_matrix.assign(static_cast<std::size_t>(n - d + 1),
                            IntRow(static_cast<std::size_t>(n), 0));
    for (int c = 0; c < nc; ++c) {
        IntRow& row = f.circuit_matrix[static_cast<std::size_t>(c)];
        row[static_cast<std::size_t>(c)] = 1;
        const Arc& a = g.arc(f.chords[static_cast<std::size_t>(c)]);
        for (int j = a.tail; j < a.head; ++j) row[static_cast<std::size_t>(nc + j - 1)] = -1;
    }
    return f;
}

namespace detail {

inline MarkedBinomial signed_vector_to_binomial(const std::vector<int>& coeff) {
    MarkedBinomial b;
    b.lead = ExponentVec(coeff.size());
    b.trail = ExponentVec(coeff.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i] > 0) b.lead[i] = coeff[i];
        if (coeff[i] < 0) b.trail[i] = -coeff[i];
        nonzero |= coeff[i] != 0;
    }
    if (!nonzero) throw invalid_input_error("zero vector has no binomial");
    return b;
}

}  // namespace detail

/// f_C = x^{u+} - x^{u-}; orientation is unmarked until a TermOrder is applied.
inline MarkedBinomial circuit_binomial(const CircuitVec& c) {
    return detail::signed_vector_to_binomial(c.coeff);
}

inline MarkedBinomial cutset_binomial(const CutsetVec& c) {
    return detail::signed_vector_to_binomial(c.coeff);
}

/// All circuit binomials: generators and universal GB of the primal ideal.
inline std::vector<MarkedBinomial> circuit_binomials(const TournamentGraph& g,
                                                     int cap = kDefaultEnumerationCap) {
    std::vector<MarkedBinomial> out;
    for (const auto& c : enumerate_circuits(g, cap)) out.push_back(circuit_binomial(c));
    return out;
}

/// All cutset binomials: generators and universal GB of the dual ideal.
inline std::vector<MarkedBinomial> cutset_binomials(const TournamentGraph& g,
                                                    int cap = kDefaultEnumerationCap) {
    std::vector<MarkedBinomial> out;
    for (const auto& c : enumerate_cutsets(g, cap)) out.push_back(cutset_binomial(c));
    return out;
}

/// The grading deg(x_{i,j}) = j - i, under which the primal ideal is
/// homogeneous; used as a well-ordering certificate for negative costs.
inline std::vector<Expo> length_grading(const TournamentGraph& g) {
    std::vector<Expo> grad;
    grad.reserve(static_cast<std::size_t>(g.arc_count()));
    for (const Arc& a : g.arcs()) grad.push_back(a.head - a.tail);
    return grad;
}

}  // namespace gbflow
