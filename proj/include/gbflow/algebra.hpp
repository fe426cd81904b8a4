#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "gbflow/monomial.hpp"
#include "gbflow/numeric.hpp"

namespace gbflow {

enum class TieBreakMode { lex, revlex };
enum class Cmp { less, equal, greater };

/// Weight order by an exact cost vector, refined to a total order by a
/// lexicographic (or reverse lexicographic) tiebreak over a variable
/// permutation. Rational weights are pre-scaled to integers once so
/// comparisons stay in cpp_int.
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(std::vector<Rat> weights, TieBreakMode tiebreak = TieBreakMode::lex,
              std::vector<int> perm = {})
        : weights_(std::move(weights)), tiebreak_(tiebreak), perm_(std::move(perm)) {
        if (perm_.empty()) {
            perm_.resize(weights_.size());
            std::iota(perm_.begin(), perm_.end(), 0);
        }
        if (perm_.size() != weights_.size())
            throw invalid_dimension_error("term order: permutation size mismatch");
        Int scale = 1;
        for (const Rat& w : weights_) scale = boost::multiprecision::lcm(scale, rat_den(w));
        scaled_.reserve(weights_.size());
        for (const Rat& w : weights_) scaled_.push_back(rat_num(w) * (scale / rat_den(w)));
        nonneg_ = std::all_of(weights_.begin(), weights_.end(),
                              [](const Rat& w) { return w >= 0; });
    }

    const std::vector<Rat>& weights() const { return weights_; }
    const std::vector<int>& perm() const { return perm_; }
    TieBreakMode tiebreak() const { return tiebreak_; }
    std::size_t size() const { return weights_.size(); }
    bool nonnegative_weights() const { return nonneg_; }

    /// Positive grading under which the generators are homogeneous; together
    /// with nonnegative weights this is one of the well-ordering certificates.
    void set_grading(std::vector<Expo> g) { grading_ = std::move(g); }
    const std::vector<Expo>& grading() const { return grading_; }

    /// Caller vouches for well-ordering on the instance (e.g. via the dual
    /// nonnegative-solution witness) even though weights go negative.
    void set_certified(bool v) { certified_ = v; }
    bool certified_flag() const { return certified_; }

    Int weight_of(const ExponentVec& u) const {
        Int s = 0;
        for (std::size_t i = 0; i < scaled_.size(); ++i)
            if (u[i] != 0) s += scaled_[i] * u[i];
        return s;
    }

    Cmp compare(const ExponentVec& u, const ExponentVec& v) const {
        const Int wu = weight_of(u), wv = weight_of(v);
        if (wu != wv) return wu > wv ? Cmp::greater : Cmp::less;
        if (tiebreak_ == TieBreakMode::lex) {
            for (int p : perm_) {
                const std::size_t i = static_cast<std::size_t>(p);
                if (u[i] != v[i]) return u[i] > v[i] ? Cmp::greater : Cmp::less;
            }
        } else {
            for (auto it = perm_.rbegin(); it != perm_.rend(); ++it) {
                const std::size_t i = static_cast<std::size_t>(*it);
                if (u[i] != v[i]) return u[i] < v[i] ? Cmp::greater : Cmp::less;
            }
        }
        return Cmp::equal;
    }

    bool greater(const ExponentVec& u, const ExponentVec& v) const {
        return compare(u, v) == Cmp::greater;
    }

private:
    std::vector<Rat> weights_;
    TieBreakMode tiebreak_ = TieBreakMode::lex;
    std::vector<int> perm_;
    std::vector<Int> scaled_;
    std::vector<Expo> grading_;
    bool nonneg_ = true;
    bool certified_ = false;
};

inline Cmp compare(const ExponentVec& u, const ExponentVec& v, const TermOrder& o) {
    return o.compare(u, v);
}

inline bool is_homogeneous(const std::vector<MarkedBinomial>& gens,
                           const std::vector<Expo>& grading) {
    for (const auto& g : gens) {
        Expo a = 0, b = 0;
        for (std::size_t i = 0; i < grading.size(); ++i) {
            a += grading[i] * g.lead[i];
            b += grading[i] * g.trail[i];
        }
        if (a != b) return false;
    }
    return true;
}

/// True when one of the well-ordering certificates applies: nonnegative
/// weights, homogeneity of the generators under the attached positive
/// grading, or an explicit caller certificate.
inline bool order_certified(const TermOrder& o, const std::vector<MarkedBinomial>& gens) {
    if (o.nonnegative_weights() || o.certified_flag()) return true;
    if (!o.grading().empty()) return is_homogeneous(gens, o.grading());
    return false;
}

inline MarkedBinomial mark(const MarkedBinomial& b, const TermOrder& o) {
    switch (o.compare(b.lead, b.trail)) {
        case Cmp::greater:
            return b;
        case Cmp::less:
            return {b.trail, b.lead};
        case Cmp::equal:
            break;
    }
    throw degenerate_binomial_error("binomial with identical monomials");
}

struct MonomialIdeal {
    std::vector<ExponentVec> generators;  // divisibility antichain, sorted

    bool contains(const ExponentVec& m) const {
        return std::any_of(generators.begin(), generators.end(),
                           [&](const ExponentVec& g) { return g.divides(m); });
    }
};

inline bool is_standard(const ExponentVec& m, const MonomialIdeal& ideal) {
    return !ideal.contains(m);
}

inline MonomialIdeal make_monomial_ideal(std::vector<ExponentVec> gens) {
    MonomialIdeal ideal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < gens.size() && minimal; ++j)
            if (i != j && gens[j].divides(gens[i]) &&
                (!gens[i].divides(gens[j]) || j < i))
                minimal = false;
        if (minimal) ideal.generators.push_back(gens[i]);
    }
    std::sort(ideal.generators.begin(), ideal.generators.end(), lex_less);
    return ideal;
}

struct GroebnerBasis {
    std::vector<MarkedBinomial> elements;  // canonically sorted
    TermOrder order;
};

inline MonomialIdeal initial_ideal(const GroebnerBasis& g) {
    std::vector<ExponentVec> leads;
    leads.reserve(g.elements.size());
    for (const auto& b : g.elements) leads.push_back(b.lead);
    return make_monomial_ideal(std::move(leads));
}

// Guard for reductions under uncertified orders: an ill-ordered weight vector
// shows up as a non-terminating division, which we cut off and report.
inline constexpr long long kUncertifiedStepGuard = 200000;

/// Division by a set of marked binomials with a pluggable reducer choice (used
/// by the confluence property test); chooser maps the list of applicable
/// reducer indices to the chosen one.
inline ExponentVec normal_form_choice(
    ExponentVec m, const std::vector<MarkedBinomial>& basis,
    const std::function<std::size_t(const std::vector<std::size_t>&)>& chooser,
    bool guarded = false) {
    long long steps = 0;
    for (;;) {
        std::vector<std::size_t> applicable;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].lead.divides(m)) applicable.push_back(i);
        if (applicable.empty()) return m;
        const MarkedBinomial& red = basis[chooser(applicable)];
        m = m - red.lead + red.trail;
        if (guarded && ++steps > kUncertifiedStepGuard)
            throw order_error("division did not terminate: order lacks a well-ordering certificate");
    }
}

inline ExponentVec normal_form(const ExponentVec& m, const std::vector<MarkedBinomial>& basis,
                               bool guarded = false) {
    return normal_form_choice(
        m, basis, [](const std::vector<std::size_t>& c) { return c.front(); }, guarded);
}

inline ExponentVec normal_form(const ExponentVec& m, const GroebnerBasis& g) {
    return normal_form(m, g.elements, !order_certified(g.order, g.elements));
}

namespace detail {

/// Strips the common monomial factor of the two sides. Valid for toric
/// (prime) ideals: if x^w(x^a - x^b) lies in the ideal, so does x^a - x^b.
inline std::optional<MarkedBinomial> cancel_common(const ExponentVec& a, const ExponentVec& b,
                                                   const TermOrder& o) {
    ExponentVec g = gcd(a, b);
    ExponentVec ra = a - g, rb = b - g;
    if (ra == rb) return std::nullopt;
    return mark(MarkedBinomial{ra, rb}, o);
}

/// Inter-reduce: keep divisibility-minimal leads, then reduce every trail to
/// normal form so the basis satisfies the reducedness conditions.
inline std::vector<MarkedBinomial> auto_reduce(std::vector<MarkedBinomial> basis,
                                               const TermOrder& o, bool guarded) {
    std::vector<MarkedBinomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            if (basis[j].lead.divides(basis[i].lead) &&
                (basis[i].lead != basis[j].lead || j < i))
                keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }
    std::vector<MarkedBinomial> reduced;
    for (const auto& b : minimal)
        reduced.push_back(mark(MarkedBinomial{b.lead, normal_form(b.trail, minimal, guarded)}, o));
    std::sort(reduced.begin(), reduced.end(), binomial_less);
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    return reduced;
}

}  // namespace detail

/// Buchberger's algorithm specialized to binomial generators: every S-pair
/// remainder is again a pure binomial, so the basis stays binomial throughout.
inline GroebnerBasis buchberger(const std::vector<MarkedBinomial>& gens, const TermOrder& o,
                                long long max_pairs = 4000000) {
    const bool guarded = !order_certified(o, gens);
    std::vector<MarkedBinomial> basis;
    for (const auto& g : gens) {
        if (g.lead == g.trail) throw degenerate_binomial_error("degenerate generator");
        auto m = detail::cancel_common(g.lead, g.trail, o);
        if (m) basis.push_back(*m);
    }
    // normal strategy: S-pairs by lcm degree, then lcm lexicographically
    using PairKey = std::tuple<Expo, std::vector<Expo>, std::size_t, std::size_t>;
    std::set<PairKey> queue;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (disjoint_support(basis[i].lead, basis[j].lead)) continue;  // coprime criterion
            ExponentVec l = lcm(basis[i].lead, basis[j].lead);
            queue.emplace(l.total_degree(), l.e, i, j);
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs(j);
    long long processed = 0;
    while (!queue.empty()) {
        if (++processed > max_pairs)
            throw order_error("Buchberger pair budget exceeded: order not certified well-founded");
        auto [deg, lvec, i, j] = *queue.begin();
        queue.erase(queue.begin());
        ExponentVec l{lvec};
        // S-binomial of two binomials: reduce each side's monomial separately
        ExponentVec a = normal_form(l - basis[i].lead + basis[i].trail, basis, guarded);
        ExponentVec b = normal_form(l - basis[j].lead + basis[j].trail, basis, guarded);
        if (a == b) continue;
        auto nb = detail::cancel_common(a, b, o);
        if (!nb) continue;
        basis.push_back(*nb);
        push_pairs(basis.size() - 1);
    }
    return {detail::auto_reduce(std::move(basis), o, guarded), o};
}

/// Extracts the reduced GB directly from a universal Gröbner basis (for these
/// ideals: all circuit resp. cutset binomials): mark everything, keep the
/// divisibility-minimal leads, and normal-form the trails against the full
/// marked set, which is already a Gröbner basis for any term order.
inline GroebnerBasis gb_from_universal(const std::vector<MarkedBinomial>& universal,
                                       const TermOrder& o) {
    if (universal.empty()) return {{}, o};
    const bool guarded = !order_certified(o, universal);
    std::vector<MarkedBinomial> marked;
    marked.reserve(universal.size());
    for (const auto& b : universal) marked.push_back(mark(b, o));
    std::vector<MarkedBinomial> minimal;
    for (std::size_t i = 0; i < marked.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < marked.size() && keep; ++j) {
            if (i == j) continue;
            if (marked[j].lead.divides(marked[i].lead) &&
                (marked[i].lead != marked[j].lead || j < i))
                keep = false;
        }
        if (keep) minimal.push_back(marked[i]);
    }
    std::vector<MarkedBinomial> reduced;
    for (const auto& b : minimal)
        reduced.push_back(mark(MarkedBinomial{b.lead, normal_form(b.trail, marked, guarded)}, o));
    std::sort(reduced.begin(), reduced.end(), binomial_less);
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    return {std::move(reduced), o};
}

}  // namespace gbflow
