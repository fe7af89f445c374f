#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "charconj/errors.hpp"

namespace charconj {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// (n)_k = n(n-1)...(n-k+1); the empty product 1 for k = 0.
inline Int falling_factorial(const Int& n, int k) {
    if (k < 0) throw error("BadArgument", "falling factorial needs k >= 0");
    Int out = 1;
    for (int j = 0; j < k; ++j) out *= n - j;
    return out;
}

inline Int factorial(int n) {
    if (n < 0) throw error("BadArgument", "factorial of a negative number");
    Int out = 1;
    for (int j = 2; j <= n; ++j) out *= j;
    return out;
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
    if (!is_integer(r)) throw error("NonIntegerCoefficient", "value " + r.str() + " is not an integer");
    return numerator(r);
}

}  // namespace charconj
