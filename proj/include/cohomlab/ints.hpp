#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cohomlab {

// Exact arithmetic everywhere: integers for coefficients, characters and
// matrix entries; rationals only inside inner products.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int m) {
    Integer r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

inline bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer to_integer(const Rational& q) {
    return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

}  // namespace cohomlab
