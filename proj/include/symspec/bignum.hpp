#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "symspec/errors.hpp"

namespace symspec {

/// Exact arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, always kept reduced.
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
inline Int binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // always exact: r is C(n-k+i, i) after this step
    }
    return r;
}

inline Int pow2(int e) {
    return Int(1) << e;
}

inline Int rat_num(const Rat& r) {
    return boost::multiprecision::numerator(r);
}

inline Int rat_den(const Rat& r) {
    return boost::multiprecision::denominator(r);
}

inline bool is_integer(const Rat& r) {
    return rat_den(r) == 1;
}

/// Reduced "p" or "p/q" rendering, q omitted when 1.
inline std::string rat_to_string(const Rat& r) {
    Int den = rat_den(r);
    std::string s = rat_num(r).str();
    if (den != 1)
        s += "/" + den.str();
    return s;
}

inline Int parse_int(std::string_view s) {
    try {
        return Int(std::string(s));
    } catch (const std::exception&) {
        throw parse_error("not an integer: '" + std::string(s) + "'");
    }
}

/// Accepts both "p" and "p/q".
inline Rat parse_rat(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0)
        throw parse_error("zero denominator in '" + std::string(s) + "'");
    return Rat(num, den);
}

} // namespace symspec
