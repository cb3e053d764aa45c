#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace specix {

// Exact arithmetic everywhere: counts in the target tables exceed 2^53 and
// the z_lambda denominators must cancel exactly, so the whole core runs on
// arbitrary-precision integers and rationals.
using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

inline bigint factorial(unsigned n) {
    bigint r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline bigint binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    bigint r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline bigint int_pow(const bigint& b, unsigned e) {
    bigint r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

inline rational rat_pow(const rational& b, unsigned e) {
    rational r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

inline bool is_integer(const rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// Numerator of an integral rational; throws if q is not an integer.
inline bigint to_integer(const rational& q) {
    if (!is_integer(q)) throw std::domain_error("expected an integer, got " + q.str());
    return boost::multiprecision::numerator(q);
}

/// "a/b", or just "a" when the denominator is 1.
inline std::string rational_str(const rational& q) {
    const bigint num = boost::multiprecision::numerator(q);
    const bigint den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace specix
