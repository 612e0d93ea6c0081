// Arbitrary-precision integers and rationals used by the exact layer.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace singlet {

using BigInt = boost::multiprecision::cpp_int;

// Canonical form (positive denominator, reduced) is maintained by the type.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& q);

}  // namespace singlet
