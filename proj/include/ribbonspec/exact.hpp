#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ribbonspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(long n)
{
    BigInt out = 1;
    for (long k = 2; k <= n; ++k) out *= k;
    return out;
}

inline BigInt big_double_factorial(long n)
{
    BigInt out = 1;
    for (long k = n; k > 1; k -= 2) out *= k;
    return out;
}

}  // namespace ribbonspec
