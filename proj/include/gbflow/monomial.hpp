#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gbflow/numeric.hpp"

namespace gbflow {

using Expo = std::int64_t;

/// A monomial x^a, stored densely over the canonical arc order.
struct ExponentVec {
    std::vector<Expo> e;

    ExponentVec() = default;
    explicit ExponentVec(std::size_t n) : e(n, 0) {}
    explicit ExponentVec(std::vector<Expo> v) : e(std::move(v)) {}

    std::size_t size() const { return e.size(); }
    Expo operator[](std::size_t i) const { return e[i]; }
    Expo& operator[](std::size_t i) { return e[i]; }

    bool operator==(const ExponentVec&) const = default;

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](Expo x) { return x == 0; });
    }

    Expo total_degree() const {
        Expo s = 0;
        for (Expo x : e) s += x;
        return s;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) s.push_back(static_cast<int>(i));
        return s;
    }

    bool divides(const ExponentVec& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
};

inline ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
}

/// Componentwise a - b; caller guarantees b divides a.
inline ExponentVec operator-(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline ExponentVec lcm(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline ExponentVec gcd(const ExponentVec& a, const ExponentVec& b) {
    ExponentVec r(a.e.size());
    for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::min(a.e[i], b.e[i]);
    return r;
}

inline bool disjoint_support(const ExponentVec& a, const ExponentVec& b) {
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != 0 && b.e[i] != 0) return false;
    return true;
}

inline bool lex_less(const ExponentVec& a, const ExponentVec& b) {
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
}

/// x^{u+} - x^{u-}: the two monomials always have disjoint support, and once an
/// order has been applied `lead` is the larger one.
struct MarkedBinomial {
    ExponentVec lead;
    ExponentVec trail;

    bool operator==(const MarkedBinomial&) const = default;

    /// Kernel vector lead - trail as plain integers.
    std::vector<Expo> direction() const {
        std::vector<Expo> u(lead.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = lead.e[i] - trail.e[i];
        return u;
    }
};

inline bool binomial_less(const MarkedBinomial& a, const MarkedBinomial& b) {
    if (a.lead != b.lead) return lex_less(a.lead, b.lead);
    return lex_less(a.trail, b.trail);
}

}  // namespace gbflow
