#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genuscount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(long n);

// binomial(m, r) = 0 unless 0 <= r <= m.  This is the Gamma-function
// convention used throughout: the reciprocal of Gamma at a nonpositive
// integer is zero, so out-of-range binomials vanish instead of throwing.
BigInt binomial(long m, long r);

// (2k-1)!! for k >= 0, i.e. 1*3*5*...*(2k-1); double_factorial_odd(0) = 1.
BigInt double_factorial_odd(long k);

BigInt pow_int(const BigInt& base, unsigned long exp);

// Exact conversion; throws if r is not an integer.
BigInt rational_to_int(const Rational& r);

inline std::string to_string(const BigInt& v) { return v.str(); }

BigInt parse_bigint(const std::string& s);

}  // namespace genuscount
