#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "wsc/errors.hpp"

namespace wsc {

/// Exact rational scalar. GMP's canonical form guarantees the invariants
/// gcd(|num|, den) = 1 and den > 0 after every arithmetic operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Checked conversion to int64; only used where values are small by
/// construction (dimensions, coefficients).
inline std::int64_t to_int64(const Rational& r) {
    if (!is_integer(r))
        raise(ErrorCode::NotIntegral, "expected an integer, got " + r.get_str());
    mpz_class n = r.get_num();
    if (!n.fits_slong_p())
        raise(ErrorCode::Generic, "integer overflow: " + n.get_str());
    return static_cast<std::int64_t>(n.get_si());
}

/// Renders "p" for integers and "p/q" otherwise, matching the wire format.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q" with arbitrary precision. Whitespace is not accepted.
Rational rat_parse(const std::string& text);

} // namespace wsc
