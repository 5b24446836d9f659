#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wsc/weight.hpp"

namespace wsc {

/// Cutoff for formal series on the torus. A term e^w is retained when
/// <w, direction> >= <reference, direction> - depth. Inactive specs keep
/// everything; they are used whenever the denominators are empty and every
/// character in sight is an honest Laurent polynomial.
struct TruncationSpec {
    bool active = false;
    CoordVector direction;
    std::int64_t depth = 0;
    TorusWeight reference;
    Rational min_pairing;

    static TruncationSpec none() { return {}; }
    static TruncationSpec window(CoordVector direction, std::int64_t depth,
                                 TorusWeight reference);

    bool keeps(const TorusWeight& w) const {
        return !active || dot(w, direction) >= min_pairing;
    }
    bool compatible(const TruncationSpec& o) const {
        return active == o.active && (!active || (direction == o.direction &&
                                                  min_pairing == o.min_pairing));
    }
};

/// Finite integer combination of torus exponentials e^w within a truncation
/// window, with exact arithmetic throughout.
struct FormalCharacter {
    std::map<TorusWeight, std::int64_t> terms;
    TruncationSpec trunc;

    static FormalCharacter zero(TruncationSpec spec) { return {{}, std::move(spec)}; }
    static FormalCharacter monomial(TorusWeight w, std::int64_t c, TruncationSpec spec);

    std::size_t term_count() const { return terms.size(); }
    bool operator==(const FormalCharacter& o) const { return terms == o.terms; }

    void prune();
    /// Sum of all coefficients, i.e. the evaluation at e^w -> 1. Only
    /// meaningful on polynomial (non-truncated) characters.
    std::int64_t evaluate_at_one() const;
};

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter char_scale(const FormalCharacter& a, std::int64_t c);
FormalCharacter char_shift(const FormalCharacter& a, const TorusWeight& shift);

/// Reference product kernel: plain nested accumulation.
FormalCharacter char_mul_serial(const FormalCharacter& a, const FormalCharacter& b);
/// OpenMP product kernel over contiguous bands of the sorted left factor;
/// result is identical to the serial reference.
FormalCharacter char_mul_parallel(const FormalCharacter& a, const FormalCharacter& b);
/// Dispatcher: serial below a pair-count threshold, parallel above it.
FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b);

/// Truncated geometric series (1 - e^mu)^{-1} (sign -1) or (1 + e^mu)^{-1}
/// (sign +1); mu must pair strictly negatively with the direction.
FormalCharacter char_geom_inverse(const TorusWeight& mu, int sign, const TruncationSpec& spec);

/// Fused multiply by (1 -+ e^mu)^{-1}, expanding only terms inside the
/// window. Requires <mu, direction> < 0.
FormalCharacter char_mul_geom_inverse(const FormalCharacter& a, const TorusWeight& mu, int sign);

/// Divide by (1 + e^mu). On polynomial characters the quotient is computed
/// exactly (coset by coset along mu) and InexactDivision reports a nonzero
/// remainder; on truncated characters a geometric expansion is used on the
/// side of mu that converges in the window.
FormalCharacter char_divide_one_plus(const FormalCharacter& a, const TorusWeight& mu);

} // namespace wsc
