#pragma once
//
// Exact integer arithmetic used throughout the library.
//
// All group-theoretic computations are done with arbitrary-precision
// integers: minor determinants of kernel matrices are products of n-1
// linear forms in the parameters and overflow 64-bit arithmetic already
// at moderate parameter sizes.
//
#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <vector>

namespace artin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Non-negative gcd; gcd(0, 0) = 0.
inline Int gcd_int(Int a, Int b) {
    using boost::multiprecision::abs;
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// gcd of a whole vector (0 for an empty or all-zero input).
inline Int gcd_vec(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    return g;
}

}  // namespace artin
