#include <doctest.h>

#include <random>
#include <set>

#include "gbflow/pairs.hpp"

using namespace gbflow;

namespace {

std::vector<std::vector<int>> sigmas_of(const std::vector<StandardPair>& pairs) {
    std::vector<std::vector<int>> s;
    for (const auto& p : pairs) s.push_back(p.sigma);
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<std::vector<int>> sigmas_of(const std::vector<TriangulationFace>& faces) {
    std::vector<std::vector<int>> s;
    for (const auto& f : faces) s.push_back(f.sigma);
    std::sort(s.begin(), s.end());
    return s;
}

RatVec random_cost(std::mt19937& rng, int n, int lo = 1, int hi = 60) {
    std::uniform_int_distribution<int> w(lo, hi);
    RatVec c(static_cast<std::size_t>(n));
    for (auto& x : c) x = w(rng);
    return c;
}

}  // namespace

TEST_CASE("primal standard pairs for the d=3 worked costs") {
    TournamentGraph g(3);
    auto p1 = standard_pairs_primal(g, TermOrder(RatVec{3, 1, 2}));
    CHECK(sigmas_of(p1) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    CHECK(arithmetic_degree(p1) == 2);
    for (const auto& p : p1) CHECK(p.root.is_one());

    auto p2 = standard_pairs_primal(g, TermOrder(RatVec{1, 4, 2}));
    CHECK(sigmas_of(p2) == std::vector<std::vector<int>>{{0, 2}});
    CHECK(arithmetic_degree(p2) == 1);
}

TEST_CASE("type-3 cost leaves only the path tree") {
    TournamentGraph g(4);
    auto p = standard_pairs_primal(g, TermOrder(cost_type3(4).values));
    CHECK(sigmas_of(p) ==
          std::vector<std::vector<int>>{{g.arc_index(1, 2), g.arc_index(2, 3),
                                         g.arc_index(3, 4)}});
}

TEST_CASE("dual standard pairs for the d=3 worked costs") {
    TournamentGraph g(3);
    auto p = standard_pairs_dual(g, RatVec{4, 0, 9});
    CHECK(sigmas_of(p) == std::vector<std::vector<int>>{{0}, {1}});
    auto p2 = standard_pairs_dual(g, RatVec{9, 0, 4});
    // leads of dual_gb(3): x12 and x13 x23; standard co-trees: {23}, {13}
    CHECK(sigmas_of(p2) == std::vector<std::vector<int>>{{1}, {2}});
    CHECK_THROWS_AS(standard_pairs_dual(g, RatVec{-1, 0, 0}), order_error);
}

TEST_CASE("dual pairs exist for every valid sampled cost") {
    std::mt19937 rng(17);
    for (int d = 3; d <= 6; ++d) {
        TournamentGraph g(d);
        for (int t = 0; t < 5; ++t) {
            RatVec b(static_cast<std::size_t>(g.arc_count()), Rat(0));
            std::uniform_int_distribution<int> w(1, 40);
            for (int i = 1; i < d; ++i)
                b[static_cast<std::size_t>(g.arc_index(i, i + 1))] = w(rng);
            if (!validate_dual_cost(g, b).valid) continue;
            auto p = standard_pairs_dual(g, b);
            CHECK(arithmetic_degree(p) >= 1);
            // each sigma is a co-tree
            for (const auto& pr : p)
                CHECK(pr.sigma.size() ==
                      static_cast<std::size_t>(g.arc_count() - (d - 1)));
        }
    }
}

TEST_CASE("triangulation faces match the worked example") {
    TournamentGraph g(3);
    auto r = triangulation_faces(g, RatVec{3, 1, 2});
    REQUIRE(r.generic);
    CHECK(sigmas_of(r.faces) == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
    for (const auto& f : r.faces) {
        CHECK(f.strict);
        // certificate: y_i - y_j = c on tree arcs, < c on chords
        for (int a : f.sigma)
            CHECK(f.certificate[static_cast<std::size_t>(g.arc(a).tail - 1)] -
                      f.certificate[static_cast<std::size_t>(g.arc(a).head - 1)] ==
                  RatVec{3, 1, 2}[static_cast<std::size_t>(a)]);
    }
    auto r2 = triangulation_faces(g, RatVec{1, 4, 2});
    REQUIRE(r2.generic);
    CHECK(sigmas_of(r2.faces) == std::vector<std::vector<int>>{{0, 2}});

    TournamentGraph g4(4);
    auto r3 = triangulation_faces(g4, cost_type1(4).values);
    CHECK(r3.faces.size() == 5);
}

TEST_CASE("non-generic cost falls back to the standard-monomial face set") {
    TournamentGraph g(3);
    // c = (1,2,1): the triangle is tight, both trees {12,23} vs {13} tie
    auto r = triangulation_faces(g, RatVec{1, 2, 1});
    CHECK(!r.generic);
    CHECK(sigmas_of(r.faces) ==
          sigmas_of(standard_pairs_primal(g, TermOrder(RatVec{1, 2, 1}))));
}

TEST_CASE("face/pair equivalence on random generic costs") {
    std::mt19937 rng(314);
    for (int d = 3; d <= 5; ++d) {
        TournamentGraph g(d);
        int generic_seen = 0;
        for (int t = 0; t < 50; ++t) {
            RatVec c = random_cost(rng, g.arc_count());
            auto faces = triangulation_faces(g, c);
            auto pairs = standard_pairs_primal(g, TermOrder(c));
            if (faces.generic) {
                ++generic_seen;
                CHECK(sigmas_of(faces.faces) == sigmas_of(pairs));
            }
            // degree bounds hold either way
            CHECK(arithmetic_degree(pairs) >= 1);
            CHECK(Int(arithmetic_degree(pairs)) <= catalan_number(d - 1));
            // every sigma is a spanning tree of size d-1
            for (const auto& p : pairs)
                CHECK(p.sigma.size() == static_cast<std::size_t>(d - 1));
        }
        CHECK(generic_seen > 25);
    }
}

TEST_CASE("homogenize matches the worked matrices") {
    TournamentGraph g(3);
    IntMat ap = homogenize(reduce_rows(incidence_matrix(g)));
    CHECK(ap == IntMat{{1, 1, 1, 1}, {1, 1, 0, 0}, {-1, 0, 1, 0}});
    // full incidence matrix of d=2
    TournamentGraph g2(2);
    CHECK(homogenize(incidence_matrix(g2).entries) == IntMat{{1, 1}, {1, 0}, {-1, 0}});
}

TEST_CASE("homogenized correspondence for the d=3 worked costs") {
    TournamentGraph g(3);
    auto faces = homogenized_triangulation_faces(g, RatVec{3, 1, 2});
    std::sort(faces.begin(), faces.end());
    CHECK(faces == std::vector<std::vector<int>>{{0, 1, 3}, {1, 2, 3}});
    auto rep = verify_homog_correspondence(g, RatVec{3, 1, 2});
    CHECK(rep.bijection);
    CHECK(rep.primal_count == 2);
    CHECK(rep.homog_with_last == 2);

    auto rep2 = verify_homog_correspondence(g, RatVec{1, 4, 2});
    CHECK(rep2.bijection);
    CHECK(rep2.primal_count == 1);
    CHECK(rep2.homog_without_last == 1);  // the face missing column n+1

    TournamentGraph g4(4);
    auto rep3 = verify_homog_correspondence(g4, cost_type3(4).values);
    CHECK(rep3.bijection);
    CHECK(rep3.primal_count == 1);

    TournamentGraph g5(5);
    CHECK_THROWS_AS(homogenized_triangulation_faces(g5, cost_type1(5).values),
                    resource_error);
}

TEST_CASE("homogenized correspondence flags non-generic costs") {
    TournamentGraph g(3);
    // 6 + 36 = 42: the triangle inequality is tight, no strict certificates
    auto rep = verify_homog_correspondence(g, RatVec{6, 42, 36});
    CHECK(!rep.generic);
    CHECK(verify_homog_correspondence(g, RatVec{3, 1, 2}).generic);

    // sampled: the bijection holds exactly on the generic costs
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> w(1, 30);
    for (int d = 3; d <= 4; ++d) {
        TournamentGraph gd(d);
        for (int t = 0; t < 30; ++t) {
            RatVec c(static_cast<std::size_t>(gd.arc_count()));
            for (auto& x : c) x = w(rng);
            auto r = verify_homog_correspondence(gd, c);
            if (r.generic) CHECK(r.bijection);
        }
    }
}

TEST_CASE("pattern trees and the maximum arithmetic degree") {
    CHECK(count_pattern_trees(TournamentGraph(3)) == 2);
    CHECK(count_pattern_trees(TournamentGraph(4)) == 5);
    CHECK(count_pattern_trees(TournamentGraph(5)) == 14);
    for (int d = 3; d <= 6; ++d) {
        auto rep = max_arith_degree_check(d);
        CHECK(rep.equal);
        CHECK(rep.catalan == catalan_number(d - 1));
    }
    CHECK(max_arith_degree_check(5).degree_type1 == 14);
}

TEST_CASE("covering: pairs partition exactly the standard monomials") {
    std::mt19937 rng(271);
    for (int d = 3; d <= 4; ++d) {
        TournamentGraph g(d);
        const std::size_t n = static_cast<std::size_t>(g.arc_count());
        std::vector<RatVec> costs{cost_type1(d).values, cost_type3(d).values,
                                  random_cost(rng, g.arc_count()),
                                  random_cost(rng, g.arc_count())};
        for (const auto& c : costs) {
            TermOrder o(c);
            MonomialIdeal in = initial_ideal(gb_from_universal(circuit_binomials(g), o));
            auto pairs = standard_pairs_primal(g, o);
            std::vector<std::set<int>> sig;
            for (const auto& p : pairs) sig.emplace_back(p.sigma.begin(), p.sigma.end());
            // enumerate all monomials of total degree <= 6
            ExponentVec m(n);
            std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
                if (pos == n) {
                    bool standard = is_standard(m, in);
                    bool covered = false;
                    for (const auto& s : sig) {
                        bool inside = true;
                        for (std::size_t i = 0; i < n && inside; ++i)
                            if (m[i] != 0 && !s.count(static_cast<int>(i))) inside = false;
                        if (inside) covered = true;
                    }
                    CHECK(standard == covered);
                    return;
                }
                for (int e = 0; e <= left; ++e) {
                    m[pos] = e;
                    rec(pos + 1, left - e);
                }
                m[pos] = 0;
            };
            rec(0, 6);
        }
    }
}
