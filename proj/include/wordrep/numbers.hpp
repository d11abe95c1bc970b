#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "wordrep/errors.hpp"

namespace wordrep {

// Exact scalar types.  Counts are Natural (arbitrary precision, kept
// non-negative by construction); intermediate series coefficients and
// summation terms are Rational.  cpp_rational canonicalizes after every
// operation, so values are always reduced with a positive denominator.
using Integer = boost::multiprecision::cpp_int;
using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Narrows a rational that must be a whole non-negative count.  Anything else
// means a formula is wrong, so this throws rather than rounding.
inline Natural to_natural(const Rational& r, const std::string& context) {
    if (!is_integer(r))
        throw InconsistencyError(context + ": expected an integer, got " + r.str());
    Natural n = numerator(r);
    if (n < 0)
        throw InconsistencyError(context + ": expected a non-negative value, got " + r.str());
    return n;
}

// 2^e for possibly negative e.
inline Rational pow2(long e) {
    Natural p = Natural(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, p) : Rational(p);
}

}  // namespace wordrep
