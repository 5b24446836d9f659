#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsc/rational.hpp"

namespace wsc {

/// Rational coordinate vector. Used both for weights of the Cartan in the
/// epsilon/delta basis and (as TorusWeight) for coordinates over a chosen
/// basis of the center of a Levi subalgebra.
struct CoordVector {
    std::vector<Rational> coords;

    CoordVector() = default;
    explicit CoordVector(std::size_t size) : coords(size) {}
    explicit CoordVector(std::vector<Rational> c) : coords(std::move(c)) {}

    std::size_t size() const { return coords.size(); }
    Rational& operator[](std::size_t i) { return coords[i]; }
    const Rational& operator[](std::size_t i) const { return coords[i]; }

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const auto& c : coords)
            if (!is_integer(c)) return false;
        return true;
    }

    CoordVector& operator+=(const CoordVector& o);
    CoordVector& operator-=(const CoordVector& o);
    CoordVector& operator*=(const Rational& s);

    friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
    friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
    friend CoordVector operator*(const Rational& s, CoordVector a) { return a *= s; }

    friend bool operator==(const CoordVector& a, const CoordVector& b) {
        return a.coords == b.coords;
    }
    friend bool operator!=(const CoordVector& a, const CoordVector& b) { return !(a == b); }

    /// Lexicographic order; gives deterministic map iteration everywhere.
    friend bool operator<(const CoordVector& a, const CoordVector& b);
};

using Weight = CoordVector;
using TorusWeight = CoordVector;

Rational dot(const CoordVector& a, const CoordVector& b);

/// Weight wire format: "a1,...,am|b1,...,bn", entries "p" or "p/q".
/// One side may be empty when the corresponding rank is zero.
Weight parse_weight(const std::string& text, std::size_t m, std::size_t n);
std::string format_weight(const Weight& w, std::size_t m);

/// Plain comma-separated rational vector, used for theta and torus weights.
CoordVector parse_coords(const std::string& text, std::size_t expected_size);
std::string format_coords(const CoordVector& v);

} // namespace wsc
