#ifndef COVERCERT_RATIONAL_HPP
#define COVERCERT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace covercert {

// Exact arithmetic throughout; certificates are unsound with floating point.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace covercert

#endif
