#pragma once

#include <cstddef>
#include <vector>

#include "wsc/rational.hpp"
#include "wsc/weight.hpp"

namespace wsc {

enum class Parity { Even, Odd, Mixed };

/// Element of gl(p|q) in the matrix realization: a (p+q) x (p+q) rational
/// matrix whose Z2-parity is determined by its block support. Rows/columns
/// below p belong to the even block.
class SuperMatrix {
public:
    SuperMatrix() : even_dim_(0), odd_dim_(0) {}
    SuperMatrix(std::size_t even_dim, std::size_t odd_dim)
        : even_dim_(even_dim), odd_dim_(odd_dim),
          entries_(total() * total()) {}

    static SuperMatrix unit(std::size_t even_dim, std::size_t odd_dim,
                            std::size_t row, std::size_t col) {
        SuperMatrix m(even_dim, odd_dim);
        m.at(row, col) = 1;
        return m;
    }

    std::size_t even_dim() const { return even_dim_; }
    std::size_t odd_dim() const { return odd_dim_; }
    std::size_t total() const { return even_dim_ + odd_dim_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * total() + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * total() + c]; }

    bool is_zero() const;
    bool same_shape(const SuperMatrix& o) const {
        return even_dim_ == o.even_dim_ && odd_dim_ == o.odd_dim_;
    }

    /// Parity of the block support; the zero matrix reports Even.
    Parity parity() const;

    /// Diagonal-block (even) and off-diagonal-block (odd) components.
    SuperMatrix even_part() const;
    SuperMatrix odd_part() const;

    SuperMatrix& operator+=(const SuperMatrix& o);
    SuperMatrix& operator-=(const SuperMatrix& o);
    SuperMatrix& operator*=(const Rational& s);
    friend SuperMatrix operator+(SuperMatrix a, const SuperMatrix& b) { return a += b; }
    friend SuperMatrix operator-(SuperMatrix a, const SuperMatrix& b) { return a -= b; }
    friend SuperMatrix operator*(const Rational& s, SuperMatrix a) { return a *= s; }
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.even_dim_ == b.even_dim_ && a.odd_dim_ == b.odd_dim_ &&
               a.entries_ == b.entries_;
    }

    friend SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b);

private:
    std::size_t even_dim_, odd_dim_;
    std::vector<Rational> entries_;
};

/// Super commutator xy - (-1)^{|x||y|} yx on homogeneous components,
/// extended bilinearly to mixed arguments.
SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y);

/// str(m) = trace over the even block minus trace over the odd block.
Rational supertrace(const SuperMatrix& m);

/// Even invariant nondegenerate bilinear form str(xy). Proportional to the
/// Killing form on the simple families handled here.
Rational invariant_form(const SuperMatrix& x, const SuperMatrix& y);

/// chi(x) = (e, x), the linear functional attached to the nilpotent e.
Rational chi(const SuperMatrix& x, const SuperMatrix& e);

/// Pairings of a Cartan weight against the documented torus basis: entry k
/// is the evaluation of w on the diagonal element with the given
/// coordinates (for a Levi center, the block indicator diagonals).
TorusWeight restrict_to_torus(const Weight& w,
                              const std::vector<CoordVector>& torus_basis_coords);

} // namespace wsc
