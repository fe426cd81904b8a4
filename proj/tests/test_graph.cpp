#include <doctest.h>

#include <set>

#include "gbflow/graph.hpp"

using namespace gbflow;

namespace {

long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
    return s;
}

}  // namespace

TEST_CASE("arc order is lexicographic and arc_index inverts it") {
    for (int d = 2; d <= 8; ++d) {
        TournamentGraph g(d);
        CHECK(g.arc_count() == d * (d - 1) / 2);
        Arc prev{0, 0};
        for (int k = 0; k < g.arc_count(); ++k) {
            const Arc& a = g.arc(k);
            CHECK(a.tail < a.head);
            CHECK(std::pair(prev.tail, prev.head) < std::pair(a.tail, a.head));
            CHECK(g.arc_index(a.tail, a.head) == k);
            prev = a;
        }
    }
    CHECK_THROWS_AS(TournamentGraph(1), invalid_dimension_error);
}

TEST_CASE("incidence matrix columns sum to zero and reduce_rows drops one row") {
    TournamentGraph g(5);
    auto a = incidence_matrix(g);
    REQUIRE(a.entries.size() == 5);
    for (int k = 0; k < g.arc_count(); ++k) {
        long long s = 0;
        int nonzero = 0;
        for (int i = 0; i < 5; ++i) {
            s += a.entries[i][k];
            nonzero += a.entries[i][k] != 0;
        }
        CHECK(s == 0);
        CHECK(nonzero == 2);
    }
    CHECK(reduce_rows(a).size() == 4);
}

TEST_CASE("circuit count matches sum_k C(d,k)(k-1)!/2") {
    // d = 3..7 -> 1, 7, 37, 197, 1172
    const long long expected[] = {1, 7, 37, 197, 1172};
    for (int d = 3; d <= 7; ++d) {
        TournamentGraph g(d);
        auto circuits = enumerate_circuits(g);
        CHECK(static_cast<long long>(circuits.size()) == expected[d - 3]);
        // no duplicates up to sign; sign is canonical so plain set suffices
        std::set<std::vector<int>> seen;
        for (auto& c : circuits) seen.insert(c.coeff);
        CHECK(seen.size() == circuits.size());
    }
}

TEST_CASE("circuits lie in ker A and carry canonical sign") {
    for (int d = 3; d <= 6; ++d) {
        TournamentGraph g(d);
        auto a = incidence_matrix(g);
        for (const auto& c : enumerate_circuits(g)) {
            for (int i = 0; i < d; ++i) {
                long long s = 0;
                for (int k = 0; k < g.arc_count(); ++k) s += a.entries[i][k] * c.coeff[k];
                CHECK(s == 0);
            }
            for (int k = 0; k < g.arc_count(); ++k) {
                if (c.coeff[k] != 0) {
                    CHECK(c.coeff[k] == 1);  // first (lex-smallest) support arc
                    break;
                }
            }
        }
    }
}

TEST_CASE("cutset count is 2^{d-1}-1 and cutsets are orthogonal to circuits") {
    for (int d = 3; d <= 6; ++d) {
        TournamentGraph g(d);
        auto cuts = enumerate_cutsets(g);
        CHECK(static_cast<int>(cuts.size()) == (1 << (d - 1)) - 1);
        auto circuits = enumerate_circuits(g);
        for (const auto& cut : cuts) {
            CHECK(cut.v_plus.front() == 1);
            for (const auto& c : circuits) CHECK(dot(cut.coeff, c.coeff) == 0);
        }
    }
}

TEST_CASE("cutset coefficients match the bipartition") {
    TournamentGraph g(4);
    for (const auto& cut : enumerate_cutsets(g)) {
        std::set<int> plus(cut.v_plus.begin(), cut.v_plus.end());
        for (int k = 0; k < g.arc_count(); ++k) {
            const Arc& a = g.arc(k);
            int want = 0;
            if (plus.count(a.tail) && !plus.count(a.head)) want = 1;
            if (!plus.count(a.tail) && plus.count(a.head)) want = -1;
            CHECK(cut.coeff[k] == want);
        }
    }
}

TEST_CASE("spanning tree count is d^{d-2}") {
    const long long expected[] = {1, 3, 16, 125, 1296, 16807};
    for (int d = 2; d <= 7; ++d) {
        TournamentGraph g(d);
        long long count = 0;
        std::set<std::vector<int>> distinct;
        for_each_spanning_tree(g, [&](const std::vector<int>& t) {
            ++count;
            CHECK(static_cast<int>(t.size()) == d - 1);
            distinct.insert(t);
        });
        CHECK(count == expected[d - 2]);
        CHECK(static_cast<long long>(distinct.size()) == count);
    }
}

TEST_CASE("enumeration caps throw resource_error") {
    TournamentGraph g(10);
    CHECK_THROWS_AS(enumerate_circuits(g), resource_error);
    CHECK_THROWS_AS(enumerate_cutsets(g), resource_error);
    CHECK_THROWS_AS(enumerate_spanning_trees(g), resource_error);
    CHECK_NOTHROW(enumerate_cutsets(g, 10));
}

TEST_CASE("fundamental matrices for d=3") {
    TournamentGraph g(3);
    auto f = fundamental_matrices(g);
    // columns: x13 | x12, x23
    CHECK(f.chords == std::vector<int>{1});
    CHECK(f.tree == std::vector<int>{0, 2});
    CHECK(f.cutset_matrix == IntMat{{1, 1, 0}, {1, 0, 1}});
    CHECK(f.circuit_matrix == IntMat{{1, -1, -1}});
    CHECK(f.circuit_matrix_arc_order() == IntMat{{-1, 1, -1}});
}

TEST_CASE("fundamental cutset and circuit matrices are orthogonal") {
    for (int d = 3; d <= 7; ++d) {
        TournamentGraph g(d);
        auto f = fundamental_matrices(g);
        CHECK(static_cast<int>(f.cutset_matrix.size()) == d - 1);
        CHECK(static_cast<int>(f.circuit_matrix.size()) == g.arc_count() - d + 1);
        for (const auto& cut : f.cutset_matrix)
            for (const auto& circ : f.circuit_matrix) {
                long long s = 0;
                for (std::size_t j = 0; j < cut.size(); ++j) s += cut[j] * circ[j];
                CHECK(s == 0);
            }
        // identity blocks in split order
        const std::size_t nc = f.chords.size();
        for (std::size_t i = 0; i < f.cutset_matrix.size(); ++i)
            for (std::size_t j = 0; j < f.tree.size(); ++j)
                CHECK(f.cutset_matrix[i][nc + j] == (i == j ? 1 : 0));
        for (std::size_t i = 0; i < f.circuit_matrix.size(); ++i)
            for (std::size_t j = 0; j < nc; ++j)
                CHECK(f.circuit_matrix[i][j] == (i == j ? 1 : 0));
    }
}

TEST_CASE("fundamental circuit rows are circuits of the graph") {
    for (int d = 3; d <= 5; ++d) {
        TournamentGraph g(d);
        auto f = fundamental_matrices(g);
        std::set<std::vector<int>> circuits;
        for (auto& c : enumerate_circuits(g)) circuits.insert(c.coeff);
        for (const auto& row : f.circuit_matrix_arc_order()) {
            std::vector<int> pos(row.size()), neg(row.size());
            for (std::size_t j = 0; j < row.size(); ++j) {
                pos[j] = static_cast<int>(row[j]);
                neg[j] = static_cast<int>(-row[j]);
            }
            CHECK((circuits.count(pos) || circuits.count(neg)));
        }
    }
}

TEST_CASE("signed vectors convert to binomials with disjoint support") {
    TournamentGraph g(4);
    for (const auto& c : enumerate_circuits(g)) {
        auto b = circuit_binomial(c);
        CHECK(disjoint_support(b.lead, b.trail));
        auto dir = b.direction();
        for (int k = 0; k < g.arc_count(); ++k) CHECK(dir[k] == c.coeff[k]);
    }
    for (const auto& c : enumerate_cutsets(g)) {
        auto b = cutset_binomial(c);
        CHECK(disjoint_support(b.lead, b.trail));
    }
    CHECK_THROWS_AS(circuit_binomial(CircuitVec{std::vector<int>(6, 0)}),
                    invalid_input_error);
}
