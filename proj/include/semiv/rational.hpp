#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace semiv {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the canonical form the
// coefficient field needs; nothing in the library ever rounds.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int rat_denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return rat_denominator(q) == 1; }

// Renders "3", "-3" or "3/4"; used by polynomial printing and reports.
inline std::string rat_to_string(const Rational& q) {
    if (is_integer(q)) return rat_numerator(q).str();
    return rat_numerator(q).str() + "/" + rat_denominator(q).str();
}

}  // namespace semiv
