#include "wsc/super_matrix.hpp"

namespace wsc {

bool SuperMatrix::is_zero() const {
    for (const auto& v : entries_)
        if (v != 0) return false;
    return true;
}

Parity SuperMatrix::parity() const {
    bool has_even = false, has_odd = false;
    for (std::size_t r = 0; r < total(); ++r)
        for (std::size_t c = 0; c < total(); ++c) {
            if (at(r, c) == 0) continue;
            bool diag_block = (r < even_dim_) == (c < even_dim_);
            (diag_block ? has_even : has_odd) = true;
        }
    if (has_even && has_odd) return Parity::Mixed;
    if (has_odd) return Parity::Odd;
    return Parity::Even;
}

SuperMatrix SuperMatrix::even_part() const {
    SuperMatrix out(even_dim_, odd_dim_);
    for (std::size_t r = 0; r < total(); ++r)
        for (std::size_t c = 0; c < total(); ++c)
            if ((r < even_dim_) == (c < even_dim_)) out.at(r, c) = at(r, c);
    return out;
}

SuperMatrix SuperMatrix::odd_part() const {
    SuperMatrix out(even_dim_, odd_dim_);
    for (std::size_t r = 0; r < total(); ++r)
        for (std::size_t c = 0; c < total(); ++c)
            if ((r < even_dim_) != (c < even_dim_)) out.at(r, c) = at(r, c);
    return out;
}

SuperMatrix& SuperMatrix::operator+=(const SuperMatrix& o) {
    if (!same_shape(o)) raise(ErrorCode::SizeMismatch, "supermatrix shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

SuperMatrix& SuperMatrix::operator-=(const SuperMatrix& o) {
    if (!same_shape(o)) raise(ErrorCode::SizeMismatch, "supermatrix shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

SuperMatrix& SuperMatrix::operator*=(const Rational& s) {
    for (auto& v : entries_) v *= s;
    return *this;
}

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b) {
    if (!a.same_shape(b)) raise(ErrorCode::SizeMismatch, "supermatrix shape mismatch");
    std::size_t d = a.total();
    SuperMatrix out(a.even_dim_, a.odd_dim_);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            const Rational& arv = a.entries_[r * d + k];
            if (arv == 0) continue;
            for (std::size_t c = 0; c < d; ++c) {
                const Rational& bkc = b.entries_[k * d + c];
                if (bkc == 0) continue;
                out.entries_[r * d + c] += arv * bkc;
            }
        }
    return out;
}

SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y) {
    if (!x.same_shape(y)) raise(ErrorCode::SizeMismatch, "supermatrix shape mismatch");
    SuperMatrix parts_x[2] = {x.even_part(), x.odd_part()};
    SuperMatrix parts_y[2] = {y.even_part(), y.odd_part()};
    SuperMatrix out(x.even_dim(), x.odd_dim());
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            SuperMatrix xy = matmul(parts_x[p], parts_y[q]);
            SuperMatrix yx = matmul(parts_y[q], parts_x[p]);
            if (p == 1 && q == 1)
                out += xy + yx;
            else
                out += xy - yx;
        }
    return out;
}

Rational supertrace(const SuperMatrix& m) {
    Rational s = 0;
    for (std::size_t i = 0; i < m.total(); ++i) {
        if (i < m.even_dim()) s += m.at(i, i);
        else s -= m.at(i, i);
    }
    return s;
}

Rational invariant_form(const SuperMatrix& x, const SuperMatrix& y) {
    return supertrace(matmul(x, y));
}

Rational chi(const SuperMatrix& x, const SuperMatrix& e) {
    return invariant_form(e, x);
}

TorusWeight restrict_to_torus(const Weight& w,
                              const std::vector<CoordVector>& torus_basis_coords) {
    TorusWeight out(torus_basis_coords.size());
    for (std::size_t k = 0; k < torus_basis_coords.size(); ++k)
        out[k] = dot(w, torus_basis_coords[k]);
    return out;
}

} // namespace wsc
