#pragma once

#include <condition_variable>
#include <deque>
#include <random>
#include <functional>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "gbflow/algebra.hpp"
#include "gbflow/catalog.hpp"
#include "gbflow/graph.hpp"
#include "gbflow/linalg.hpp"

namespace gbflow {

enum class Side { primal, dual };

/// Canonical serialization of a (sorted) marked basis, used for fan
/// deduplication and membership checks. All exponents here are tiny.
inline std::string basis_key(const GroebnerBasis& g) {
    std::string key;
    key.reserve(g.elements.size() * (2 * (g.elements.empty() ? 0 : g.elements[0].lead.size()) + 1));
    for (const auto& b : g.elements) {
        for (Expo e : b.lead.e) key.push_back(static_cast<char>(e + 1));
        for (Expo e : b.trail.e) key.push_back(static_cast<char>(e + 1));
        key.push_back('|');
    }
    return key;
}

struct GroebnerCone {
    GroebnerBasis basis;
    std::vector<std::vector<Expo>> inequalities;  // u = lead - trail per element
    std::vector<bool> is_facet;
    std::vector<RatVec> certificates;  // relative-interior wall point per facet
};

namespace detail {

/// Wall test: does {c . u_i = 0, c . u_j >= 1 (j != i)} meet the cone's
/// carrier? Primal costs range over all of R^n; dual weight orders live in
/// the positive orthant, where the extra c >= 1 rows make the relative
/// interior exact (both constraint families scale together).
///
/// Tested through its Farkas alternative, which is much smaller: the wall
/// system is infeasible exactly when a normalized nonnegative combination of
/// the other rows (plus, on the dual side, the orthant rows) cancels some
/// multiple of u_i. Primal directions live in the circuit space, so the
/// alternative is posed in chord coordinates (pass the chord arc indices);
/// a Farkas certificate of the alternative scales into a wall point.
inline std::pair<bool, RatVec> wall_certificate(const std::vector<std::vector<Expo>>& ineqs,
                                                std::size_t i, Side side,
                                                const std::vector<int>& chords) {
    const std::size_t m = ineqs.size();
    const std::size_t n = ineqs[0].size();
    const std::size_t r = side == Side::primal ? chords.size() : n;
    auto coord = [&](const std::vector<Expo>& u, std::size_t row) -> Expo {
        return side == Side::primal ? u[static_cast<std::size_t>(chords[row])] : u[row];
    };
    const std::size_t tvars = side == Side::dual ? n : 0;
    RatMat a(r + 1, RatVec(m - 1 + tvars + 2, Rat(0)));
    RatVec rhs(r + 1, Rat(0));
    rhs[r] = 1;  // normalization: the combination is nontrivial
    std::size_t col = 0;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        for (std::size_t row = 0; row < r; ++row) a[row][col] = coord(ineqs[j], row);
        a[r][col] = 1;
        ++col;
    }
    for (std::size_t k = 0; k < tvars; ++k, ++col) {  // orthant rows e_k
        a[k][col] = 1;
        a[r][col] = 1;
    }
    for (std::size_t row = 0; row < r; ++row) {  // free multiple of u_i
        a[row][col] = coord(ineqs[i], row);
        a[row][col + 1] = -coord(ineqs[i], row);
    }
    auto lp = lp_feasible(a, rhs);
    if (lp.feasible) return {false, {}};  // a cancellation exists: no wall point
    // Farkas w has w.col <= 0 per column and w[r] > 0, so -w/w[r] evaluates
    // to >= 1 on every other direction (and orthant row) and 0 on u_i.
    const Rat& scale = lp.farkas[r];
    RatVec c(n, Rat(0));
    for (std::size_t row = 0; row < r; ++row) {
        const std::size_t k =
            side == Side::primal ? static_cast<std::size_t>(chords[row]) : row;
        c[k] = -lp.farkas[row] / scale;
    }
    return {true, std::move(c)};
}

inline TermOrder fan_order(const TournamentGraph& g, RatVec weights, Side side) {
    TermOrder o(std::move(weights));
    if (side == Side::primal) o.set_grading(length_grading(g));
    return o;
}

}  // namespace detail

inline GroebnerCone groebner_cone(const GroebnerBasis& g, Side side) {
    GroebnerCone cone;
    cone.basis = g;
    for (const auto& b : g.elements) cone.inequalities.push_back(b.direction());
    cone.is_facet.assign(g.elements.size(), false);
    cone.certificates.resize(g.elements.size());
    std::vector<int> chords;
    if (side == Side::primal && !cone.inequalities.empty()) {
        const std::size_t n = cone.inequalities[0].size();
        int d = 2;
        while (static_cast<std::size_t>(d * (d - 1) / 2) < n) ++d;
        chords = fundamental_matrices(TournamentGraph(d)).chords;
    }
    for (std::size_t i = 0; i < cone.inequalities.size(); ++i) {
        auto [facet, cert] = detail::wall_certificate(cone.inequalities, i, side, chords);
        cone.is_facet[i] = facet;
        if (facet) cone.certificates[i] = std::move(cert);
    }
    return cone;
}

/// Crosses the facet at its certificate point: step by an exact epsilon along
/// the inward-negated normal, halving epsilon until the old certificate lies
/// in the closure of the new cone — that pins down the unique adjacent cone.
/// Returns the new basis and an interior cost for it.
inline std::pair<GroebnerBasis, RatVec> flip(const TournamentGraph& g,
                                             const std::vector<MarkedBinomial>& universal,
                                             const GroebnerCone& cone, std::size_t facet,
                                             Side side) {
    if (facet >= cone.is_facet.size() || !cone.is_facet[facet])
        throw invalid_input_error("flip: inequality is not a facet");
    const auto& u = cone.inequalities[facet];
    const RatVec& cert = cone.certificates[facet];
    Int bound = 0;
    for (const auto& v : cone.inequalities) {
        Int dotp = 0;
        for (std::size_t k = 0; k < u.size(); ++k) dotp += Int(u[k]) * v[k];
        if (dotp < 0) dotp = -dotp;
        bound = std::max(bound, dotp);
    }
    for (Expo e : u) bound = std::max(bound, Int(e < 0 ? -e : e));
    Rat eps(1, bound + 1);
    for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
        RatVec shifted(cert);
        for (std::size_t k = 0; k < u.size(); ++k) shifted[k] -= eps * u[k];
        auto gb = gb_from_universal(universal, detail::fan_order(g, shifted, side));
        bool adjacent = true;
        for (const auto& b : gb.elements) {
            Rat s = 0;
            auto dir = b.direction();
            for (std::size_t k = 0; k < dir.size(); ++k) s += cert[k] * dir[k];
            if (s < 0) {
                adjacent = false;
                break;
            }
        }
        if (adjacent) return {std::move(gb), std::move(shifted)};
    }
    throw error("flip failed to localize the adjacent cone");
}

struct FanResult {
    std::set<std::string> keys;  // canonical forms of all bases found
    std::size_t count = 0;
    std::size_t max_card = 0;
    std::size_t min_card = 0;
    std::size_t valid_count = 0;  // dual: cones holding a usable dual cost
    bool partial = false;
};

namespace detail {

/// Dual side only: is there a cost in this cone's interior with zero chords
/// and a nonnegative cutset decomposition (the usable dual costs)?
inline bool cone_has_valid_dual_cost(const TournamentGraph& g,
                                     const std::vector<std::vector<Expo>>& ineqs) {
    auto f = fundamental_matrices(g);
    const std::size_t m = ineqs.size();
    if (m == 0) return true;
    // The usable dual costs are exactly {zero chords, nonnegative tree
    // components}, so look for nonnegative tree weights scoring >= 1 on
    // every cone inequality. Variables: w (tree, >= 0), one slack per row.
    const std::size_t t = f.tree.size();
    RatMat sys(m, RatVec(t + m, Rat(0)));
    RatVec rhs(m, Rat(1));
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t r = 0; r < t; ++r)
            sys[j][r] = ineqs[j][static_cast<std::size_t>(f.tree[r])];
        sys[j][t + j] = -1;
    }
    return lp_feasible(sys, rhs).feasible;
}

}  // namespace detail

struct FanOptions {
    std::size_t budget = 500000;
    int threads = 1;
    // observes every distinct basis once, from the discovering thread
    std::function<void(const GroebnerBasis&)> sink;
};

/// Breadth-first closure under facet flips from the catalog seed basis.
/// The primal fan covers all of R^n (the ideal is graded); the dual fan is
/// enumerated over the positive orthant of weight orders.
inline FanResult enumerate_fan(Side side, int d, FanOptions opts = {}) {
    TournamentGraph g(d);
    const auto universal =
        side == Side::primal ? circuit_binomials(g) : cutset_binomials(g);
    const RatVec seed_cost =
        side == Side::primal ? cost_type1(d).values : dual_cost_decreasing(d).values;

    FanResult res;
    std::mutex mu;
    std::condition_variable cv;
    std::deque<RatVec> work;
    int active = 0;

    auto admit = [&](const GroebnerBasis& gb, RatVec cost) {
        // validity probe runs outside the lock; it only reads the basis
        const bool valid =
            side == Side::dual &&
            [&] {
                std::vector<std::vector<Expo>> ineqs;
                for (const auto& b : gb.elements) ineqs.push_back(b.direction());
                return detail::cone_has_valid_dual_cost(g, ineqs);
            }();
        std::string key = basis_key(gb);
        bool fresh = false;
        {
            std::lock_guard<std::mutex> lk(mu);
            if (!res.keys.count(key)) {
                if (res.keys.size() >= opts.budget) {
                    res.partial = true;
                    return;
                }
                res.keys.insert(std::move(key));
                const std::size_t card = gb.elements.size();
                res.max_card = std::max(res.max_card, card);
                res.min_card = res.count == 0 ? card : std::min(res.min_card, card);
                ++res.count;
                if (valid) ++res.valid_count;
                work.push_back(std::move(cost));
                fresh = true;
            }
        }
        if (fresh) {
            if (opts.sink) opts.sink(gb);
            cv.notify_all();
        }
    };

    admit(gb_from_universal(universal, detail::fan_order(g, seed_cost, side)), seed_cost);

    auto worker = [&] {
        std::unique_lock<std::mutex> lk(mu);
        for (;;) {
            cv.wait(lk, [&] { return !work.empty() || active == 0; });
            if (work.empty()) {
                if (active == 0) return;
                continue;
            }
            RatVec cost = std::move(work.front());
            work.pop_front();
            ++active;
            lk.unlock();

            auto gb = gb_from_universal(universal, detail::fan_order(g, cost, side));
            auto cone = groebner_cone(gb, side);
            for (std::size_t i = 0; i < cone.is_facet.size(); ++i) {
                if (!cone.is_facet[i]) continue;
                auto [ngb, ncost] = flip(g, universal, cone, i, side);
                admit(ngb, std::move(ncost));
            }

            lk.lock();
            --active;
            if (active == 0 && work.empty()) cv.notify_all();
        }
    };

    const int nthreads = std::max(1, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!work.empty()) res.partial = true;
    return res;
}

struct CrossCheckReport {
    int trials = 0;
    int found = 0;
    bool complete() const { return trials == found; }
};

/// Samples random costs and checks the engine basis is one the fan found.
inline CrossCheckReport fan_cross_check(Side side, int d, const FanResult& fan, int trials,
                                        unsigned seed) {
    TournamentGraph g(d);
    const auto universal =
        side == Side::primal ? circuit_binomials(g) : cutset_binomials(g);
    std::mt19937 rng(seed);
    CrossCheckReport rep;
    rep.trials = trials;
    for (int t = 0; t < trials; ++t) {
        RatVec c(static_cast<std::size_t>(g.arc_count()), Rat(0));
        if (side == Side::primal) {
            std::uniform_int_distribution<int> w(-30, 30);
            for (auto& v : c) v = w(rng);
        } else {
            // usable dual costs: zero chords, nonnegative on the path
            std::uniform_int_distribution<int> w(0, 30);
            for (int i = 1; i < d; ++i)
                c[static_cast<std::size_t>(g.arc_index(i, i + 1))] = w(rng);
        }
        auto gb = gb_from_universal(universal, detail::fan_order(g, c, side));
        if (fan.keys.count(basis_key(gb))) ++rep.found;
    }
    return rep;
}

}  // namespace gbflow
