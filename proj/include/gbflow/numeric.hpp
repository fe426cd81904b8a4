#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gbflow {

// Exact arithmetic everywhere: term-order comparisons and linear algebra
// are all-or-nothing, so no floating point appears in this library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_dimension_error : error {
    using error::error;
};
struct invalid_input_error : error {
    using error::error;
};
struct resource_error : error {
    using error::error;
};
struct degenerate_binomial_error : error {
    using error::error;
};
struct order_error : error {
    using error::error;
};
struct invalid_basis_error : error {
    using error::error;
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

/// Renders q as "p" or "p/q"; used wherever exactness must survive serialization.
inline std::string rat_to_string(const Rat& q) {
    if (is_integral(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline Int binomial_coefficient(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/// C_m = binom(2m, m) / (m + 1).
inline Int catalan_number(int m) {
    Int r = binomial_coefficient(2 * m, m);
    r /= m + 1;
    return r;
}

}  // namespace gbflow
