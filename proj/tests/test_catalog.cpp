#include <doctest.h>

#include "gbflow/catalog.hpp"

using namespace gbflow;

namespace {

std::size_t type_count(int d) {
    return static_cast<std::size_t>(binomial_coefficient(d, 3) + binomial_coefficient(d, 4));
}

ExponentVec ev(std::initializer_list<Expo> v) { return ExponentVec(std::vector<Expo>(v)); }

}  // namespace

TEST_CASE("cost formulas and their validators") {
    TournamentGraph g3(3);
    auto c1 = cost_type1(3);
    CHECK(c1.values == RatVec{5, 8, 5});
    CHECK(validate_type1(g3, c1.values));

    TournamentGraph g4(4);
    auto c2 = cost_type2(4);
    // c_{1,4}+c_{2,3} = 25+17 > 20+20 = c_{1,3}+c_{2,4}
    CHECK(c2.values[g4.arc_index(1, 4)] + c2.values[g4.arc_index(2, 3)] >
          c2.values[g4.arc_index(1, 3)] + c2.values[g4.arc_index(2, 4)]);
    auto c3 = cost_type3(4);
    CHECK(c3.values[g4.arc_index(1, 4)] == 9);
    CHECK(validate_type3(g4, c3.values));
    for (int d = 3; d <= 7; ++d) {
        TournamentGraph g(d);
        CHECK(validate_type1(g, cost_type1(d).values));
        CHECK(validate_type2(g, cost_type2(d).values));
        CHECK(validate_type3(g, cost_type3(d).values));
        CHECK(validate_dual_decreasing(g, dual_cost_decreasing(d).values));
    }
    // validators reject wrong kinds
    CHECK(!validate_type3(g4, cost_type1(4).values));
    CHECK(!validate_type1(g4, cost_type3(4).values));
}

TEST_CASE("dual decreasing cost values") {
    TournamentGraph g(3);
    CHECK(dual_cost_decreasing(3).values == RatVec{4, 0, 2});
    auto b4 = dual_cost_decreasing(4);
    TournamentGraph g4(4);
    CHECK(b4.values[g4.arc_index(1, 2)] == 6);
    CHECK(b4.values[g4.arc_index(2, 3)] == 4);
    CHECK(b4.values[g4.arc_index(3, 4)] == 2);
    CHECK(b4.values[g4.arc_index(1, 3)] == 0);
}

TEST_CASE("validate_dual_cost witnesses") {
    TournamentGraph g(3);
    auto rep = validate_dual_cost(g, RatVec{4, 0, 9});
    REQUIRE(rep.valid);
    // witness solves x13+x12 = 4, x13+x23 = 9 with x >= 0 (split order x13|x12,x23)
    CHECK(rep.witness[0] + rep.witness[1] == 4);
    CHECK(rep.witness[0] + rep.witness[2] == 9);
    for (auto& w : rep.witness) CHECK(w >= 0);

    CHECK(!validate_dual_cost(g, RatVec{-1, 0, 0}).valid);
    CHECK_THROWS_AS(validate_dual_cost(g, RatVec{1, 2, 3}), invalid_input_error);
    CHECK_THROWS_AS(validate_dual_cost(g, RatVec{1, 2}), invalid_dimension_error);
}

TEST_CASE("closed-form cardinalities") {
    for (int d = 3; d <= 7; ++d) {
        CHECK(gb_type1(d).size() == type_count(d));
        CHECK(gb_type2(d).size() == type_count(d));
        CHECK(gb_type3(d).size() ==
              static_cast<std::size_t>(d * (d - 1) / 2 - (d - 1)));
        CHECK(dual_gb(d).size() == static_cast<std::size_t>(d - 1));
    }
    CHECK(gb_type1(4).size() == 5);
    CHECK(gb_type1(5).size() == 15);
    CHECK(gb_type3(4).size() == 3);
    CHECK(gb_type3(7).size() == 15);
    CHECK(gb_type1(2).empty());
    CHECK(gb_type3(2).empty());
    CHECK(dual_gb(2) == std::vector<MarkedBinomial>{{ev({1}), ev({0})}});
}

TEST_CASE("d=3 closed forms match the worked example") {
    CHECK(gb_type3(3) == std::vector<MarkedBinomial>{{ev({0, 1, 0}), ev({1, 0, 1})}});
    auto dg = dual_gb(3);
    REQUIRE(dg.size() == 2);
    CHECK(dg[0] == MarkedBinomial{ev({1, 0, 0}), ev({0, 0, 1})});  // x12 - x23
    CHECK(dg[1] == MarkedBinomial{ev({0, 1, 1}), ev({0, 0, 0})});  // x13 x23 - 1
}

TEST_CASE("gb_type1 elements are circuit binomials, dual_gb elements cutsets") {
    for (int d = 3; d <= 5; ++d) {
        TournamentGraph g(d);
        std::set<std::vector<Expo>> circ;
        for (const auto& b : circuit_binomials(g)) {
            auto u = b.direction();
            circ.insert(u);
            for (auto& x : u) x = -x;
            circ.insert(u);
        }
        for (const auto& b : gb_type1(d)) CHECK(circ.count(b.direction()));
        for (const auto& b : gb_type2(d)) CHECK(circ.count(b.direction()));
        for (const auto& b : gb_type3(d)) CHECK(circ.count(b.direction()));
        std::set<std::vector<Expo>> cuts;
        for (const auto& b : cutset_binomials(g)) {
            auto u = b.direction();
            cuts.insert(u);
            for (auto& x : u) x = -x;
            cuts.insert(u);
        }
        for (const auto& b : dual_gb(d)) CHECK(cuts.count(b.direction()));
    }
}

TEST_CASE("dual_gb elements are the (V minus {i}, {i}) cutsets") {
    for (int d = 3; d <= 5; ++d) {
        TournamentGraph g(d);
        auto cuts = enumerate_cutsets(g);
        auto dg = dual_gb(d);
        for (int i = 2; i <= d; ++i) {
            std::vector<int> vplus;
            for (int v = 1; v <= d; ++v)
                if (v != i) vplus.push_back(v);
            bool found = false;
            for (const auto& c : cuts) {
                if (c.v_plus != vplus) continue;
                found = true;
                auto dir = dg[static_cast<std::size_t>(i - 2)].direction();
                // cutset oriented into {i}: arcs (j,i) positive, (i,k) negative
                for (int k = 0; k < g.arc_count(); ++k)
                    CHECK(dir[static_cast<std::size_t>(k)] ==
                          static_cast<Expo>(c.coeff[static_cast<std::size_t>(k)]));
            }
            CHECK(found);
        }
    }
}

TEST_CASE("verify_catalog: engine equals closed form for d=3..7") {
    for (int d = 3; d <= 7; ++d) {
        for (auto kind : {CatalogKind::type1, CatalogKind::type2, CatalogKind::type3,
                          CatalogKind::dual}) {
            auto rep = verify_catalog(d, kind);
            CHECK(rep.equal);
            CHECK(rep.engine_size == rep.closed_form_size);
        }
    }
    CHECK(verify_catalog(4, CatalogKind::type1).closed_form_size == 5);
    CHECK(verify_catalog(5, CatalogKind::type3).closed_form_size == 6);
    CHECK(verify_catalog(4, CatalogKind::dual).closed_form_size == 3);
}

TEST_CASE("closed forms agree with buchberger for small d") {
    for (int d = 3; d <= 5; ++d) {
        TournamentGraph g(d);
        auto gb = buchberger(circuit_binomials(g), TermOrder(cost_type1(d).values));
        auto closed = gb_type1(d);
        std::sort(closed.begin(), closed.end(), binomial_less);
        CHECK(gb.elements == closed);
        auto dgb = buchberger(cutset_binomials(g), TermOrder(dual_cost_decreasing(d).values));
        auto dclosed = dual_gb(d);
        std::sort(dclosed.begin(), dclosed.end(), binomial_less);
        CHECK(dgb.elements == dclosed);
    }
}
