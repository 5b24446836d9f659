#include "wsc/root_data.hpp"

#include <algorithm>
#include <map>

#include "wsc/linalg.hpp"

namespace wsc {

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::OSP: return "osp";
    }
    return "gl";
}

int RootDatum::super_z_degree(const Weight& root) const {
    Rational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += root[i];
    if (!is_integer(s) || s < -1 || s > 1)
        raise(ErrorCode::Generic, "weight is not a root of a type-I system");
    return static_cast<int>(to_int64(s));
}

Rational RootDatum::super_form(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (i < m) s += a[i] * b[i];
        else s -= a[i] * b[i];
    }
    if (family == Family::OSP) s /= 2;
    return s;
}

Rational RootDatum::even_form(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += a[i] * b[i];
    return s;
}

SuperMatrix RootDatum::diagonal(const CoordVector& coords) const {
    if (coords.size() != rank())
        raise(ErrorCode::SizeMismatch, "coordinate vector has wrong rank");
    SuperMatrix out(even_dim, odd_dim);
    for (std::size_t k = 0; k < rank(); ++k)
        out += coords[k] * cartan_basis[k];
    return out;
}

CoordVector RootDatum::diagonal_coords(const SuperMatrix& mat) const {
    for (std::size_t r = 0; r < mat.total(); ++r)
        for (std::size_t c = 0; c < mat.total(); ++c)
            if (r != c && mat.at(r, c) != 0)
                raise(ErrorCode::NotCentral, "matrix is not diagonal");
    CoordVector coords(rank());
    if (family == Family::OSP) {
        coords[0] = mat.at(0, 0);
        if (mat.at(1, 1) != -coords[0])
            raise(ErrorCode::NotCentral, "diagonal is not in the osp Cartan");
        for (std::size_t i = 0; i < n; ++i) {
            coords[1 + i] = mat.at(2 + i, 2 + i);
            if (mat.at(2 + 2 * n - 1 - i, 2 + 2 * n - 1 - i) != -coords[1 + i])
                raise(ErrorCode::NotCentral, "diagonal is not in the osp Cartan");
        }
    } else {
        for (std::size_t i = 0; i < rank(); ++i) coords[i] = mat.at(i, i);
    }
    return coords;
}

namespace {

Weight unit_weight(std::size_t rank, std::size_t index, int sign = 1) {
    Weight w(rank);
    w[index] = sign;
    return w;
}

RootDatum build_gl(Family family, std::size_t m, std::size_t n) {
    RootDatum rd;
    rd.family = family;
    rd.m = m;
    rd.n = n;
    rd.even_dim = m;
    rd.odd_dim = n;
    std::size_t rank = m + n;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            rd.even_positive_roots.push_back(unit_weight(rank, i) - unit_weight(rank, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            rd.even_positive_roots.push_back(unit_weight(rank, m + i) - unit_weight(rank, m + j));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rd.odd_positive_roots.push_back(unit_weight(rank, i) - unit_weight(rank, m + j));

    for (std::size_t i = 0; i < rank; ++i)
        rd.cartan_basis.push_back(SuperMatrix::unit(m, n, i, i));

    for (std::size_t i = 0; i < rank; ++i) {
        GBasisElement el{SuperMatrix::unit(m, n, i, i), false, Weight(rank), 0};
        rd.basis.push_back(std::move(el));
    }
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b) {
            if (a == b) continue;
            Weight w = unit_weight(rank, a) - unit_weight(rank, b);
            bool odd = (a < m) != (b < m);
            int z = odd ? ((a < m) ? 1 : -1) : 0;
            rd.basis.push_back({SuperMatrix::unit(m, n, a, b), odd, std::move(w), z});
        }

    rd.rho0 = Weight(rank);
    for (std::size_t i = 0; i < m; ++i)
        rd.rho0[i] = rat(static_cast<long>(m) - 1 - 2 * static_cast<long>(i), 2);
    for (std::size_t j = 0; j < n; ++j)
        rd.rho0[m + j] = rat(static_cast<long>(n) - 1 - 2 * static_cast<long>(j), 2);
    rd.rho1 = Weight(rank);
    for (std::size_t i = 0; i < m; ++i) rd.rho1[i] = rat(static_cast<long>(n), 2);
    for (std::size_t j = 0; j < n; ++j) rd.rho1[m + j] = rat(-static_cast<long>(m), 2);
    rd.rho = rd.rho0 - rd.rho1;
    return rd;
}

// osp(2|2n) realized inside gl(2|2n). The even form is antidiagonal on the
// 2-dimensional even space; the symplectic form on the odd space pairs the
// odd-block positions o and 2n-1-o with sign +1 for o < n.
struct OspForm {
    std::size_t n;
    Rational b(std::size_t row, std::size_t col) const {
        std::size_t d = 2 + 2 * n;
        if (row >= d || col >= d) return 0;
        if (row < 2 && col < 2) return (row + col == 1) ? 1 : 0;
        if (row >= 2 && col >= 2) {
            std::size_t o = row - 2, p = col - 2;
            if (o + p != 2 * n - 1) return 0;
            return o < n ? 1 : -1;
        }
        return 0;
    }
};

// Coordinate functional of a diagonal position: the weight of the standard
// basis vector at that position, in (eps | delta_1..delta_n) coordinates.
CoordVector osp_position_weight(std::size_t n, std::size_t pos) {
    CoordVector w(1 + n);
    if (pos == 0) w[0] = 1;
    else if (pos == 1) w[0] = -1;
    else {
        std::size_t o = pos - 2;
        if (o < n) w[1 + o] = 1;
        else w[1 + (2 * n - 1 - o)] = -1;
    }
    return w;
}

// x^{st} B + B x for a parity-homogeneous x, with the supertranspose
// x^{st} = [[A^T, C^T], [-B^T, D^T]] for x = [[A, B], [C, D]].
SuperMatrix osp_constraint(const SuperMatrix& x, const OspForm& form) {
    std::size_t d = x.total();
    std::size_t p = x.even_dim();
    SuperMatrix st(x.even_dim(), x.odd_dim());
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Rational v = x.at(c, r);
            if (v == 0) continue;
            // sign -1 exactly on the upper-right block of the transpose
            // source, i.e. when (c, r) lies in the upper-right block.
            if (c < p && r >= p) v = -v;
            st.at(r, c) = v;
        }
    SuperMatrix out(x.even_dim(), x.odd_dim());
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            Rational sum = 0;
            for (std::size_t k = 0; k < d; ++k) {
                sum += st.at(r, k) * form.b(k, c);
                sum += form.b(r, k) * x.at(k, c);
            }
            out.at(r, c) = sum;
        }
    return out;
}

RootDatum build_osp(std::size_t n) {
    RootDatum rd;
    rd.family = Family::OSP;
    rd.m = 1;
    rd.n = n;
    rd.even_dim = 2;
    rd.odd_dim = 2 * n;
    std::size_t rank = 1 + n;
    OspForm form{n};

    // even positive roots: delta_i - delta_j, delta_i + delta_j (i < j), 2 delta_i
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            rd.even_positive_roots.push_back(unit_weight(rank, 1 + i) - unit_weight(rank, 1 + j));
            rd.even_positive_roots.push_back(unit_weight(rank, 1 + i) + unit_weight(rank, 1 + j));
        }
    for (std::size_t i = 0; i < n; ++i)
        rd.even_positive_roots.push_back(rat(2) * unit_weight(rank, 1 + i));
    // odd positive roots: eps - delta_i, eps + delta_i
    for (std::size_t i = 0; i < n; ++i) {
        rd.odd_positive_roots.push_back(unit_weight(rank, 0) - unit_weight(rank, 1 + i));
        rd.odd_positive_roots.push_back(unit_weight(rank, 0) + unit_weight(rank, 1 + i));
    }

    // Cartan basis: h_eps = E00 - E11, h_{delta_i} = E_{2+i-1} - E_{2+2n-i}
    {
        SuperMatrix h_eps(2, 2 * n);
        h_eps.at(0, 0) = 1;
        h_eps.at(1, 1) = -1;
        rd.cartan_basis.push_back(h_eps);
        for (std::size_t i = 0; i < n; ++i) {
            SuperMatrix h(2, 2 * n);
            h.at(2 + i, 2 + i) = 1;
            h.at(2 + 2 * n - 1 - i, 2 + 2 * n - 1 - i) = -1;
            rd.cartan_basis.push_back(h);
        }
    }
    for (const auto& h : rd.cartan_basis)
        rd.basis.push_back({h, false, Weight(rank), 0});

    // Root vectors: group matrix units by weight, intersect each group's
    // span with the form-preservation condition.
    std::size_t d = 2 + 2 * n;
    std::map<Weight, std::vector<std::pair<std::size_t, std::size_t>>> groups;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            if (a == b) continue;
            Weight w = osp_position_weight(n, a) - osp_position_weight(n, b);
            groups[w].push_back({a, b});
        }
    std::vector<Weight> found_roots;
    for (const auto& [w, units] : groups) {
        if (w.is_zero()) continue;
        // constraint rows: entries of osp_constraint for each unit
        std::vector<SuperMatrix> cons;
        cons.reserve(units.size());
        for (auto [a, b] : units)
            cons.push_back(osp_constraint(SuperMatrix::unit(2, 2 * n, a, b), form));
        RatMatrix sys(d * d, units.size());
        for (std::size_t u = 0; u < units.size(); ++u)
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c)
                    sys.at(r * d + c, u) = cons[u].at(r, c);
        auto kernel = sys.kernel_basis();
        for (const auto& coeffs : kernel) {
            SuperMatrix vec(2, 2 * n);
            for (std::size_t u = 0; u < units.size(); ++u)
                if (coeffs[u] != 0)
                    vec += coeffs[u] * SuperMatrix::unit(2, 2 * n, units[u].first, units[u].second);
            bool odd = vec.parity() == Parity::Odd;
            int z = odd ? rd.super_z_degree(w) : 0;
            rd.basis.push_back({std::move(vec), odd, w, z});
            found_roots.push_back(w);
        }
    }

    // cross-check the computed root set against the declared one
    std::vector<Weight> declared;
    for (const auto& r : rd.even_positive_roots) {
        declared.push_back(r);
        declared.push_back(rat(-1) * r);
    }
    for (const auto& r : rd.odd_positive_roots) {
        declared.push_back(r);
        declared.push_back(rat(-1) * r);
    }
    std::sort(declared.begin(), declared.end());
    std::sort(found_roots.begin(), found_roots.end());
    if (declared != found_roots)
        raise(ErrorCode::Generic, "osp root enumeration mismatch");

    rd.rho0 = Weight(rank);
    for (std::size_t i = 0; i < n; ++i) rd.rho0[1 + i] = rat(static_cast<long>(n - i));
    rd.rho1 = Weight(rank);
    rd.rho1[0] = rat(static_cast<long>(n));
    rd.rho = rd.rho0 - rd.rho1;
    return rd;
}

} // namespace

RootDatum build_root_datum(Family family, std::size_t m, std::size_t n) {
    switch (family) {
        case Family::GL:
        case Family::SL:
            if (m + n == 0)
                raise(ErrorCode::UnsupportedFamily, "gl(0|0) has no Cartan");
            if (family == Family::SL && m == n)
                raise(ErrorCode::UnsupportedFamily,
                      "sl(n|n) is excluded: the supertrace form degenerates on the quotient");
            return build_gl(family, m, n);
        case Family::OSP:
            if (m != 1 || n < 1)
                raise(ErrorCode::UnsupportedFamily,
                      "osp support covers osp(2|2n) with n >= 1 only");
            return build_osp(n);
    }
    raise(ErrorCode::UnsupportedFamily, "unknown family");
}

RootDatum parse_algebra(const std::string& text) {
    auto open = text.find('(');
    auto bar = text.find('|');
    auto close = text.find(')');
    if (open == std::string::npos || bar == std::string::npos || close == std::string::npos ||
        !(open < bar && bar < close) || close != text.size() - 1)
        raise(ErrorCode::ParseError, "bad algebra format: '" + text + "'");
    std::string fam = text.substr(0, open);
    long p = 0, q = 0;
    try {
        p = std::stol(text.substr(open + 1, bar - open - 1));
        q = std::stol(text.substr(bar + 1, close - bar - 1));
    } catch (const std::exception&) {
        raise(ErrorCode::ParseError, "bad algebra format: '" + text + "'");
    }
    if (p < 0 || q < 0)
        raise(ErrorCode::ParseError, "bad algebra format: '" + text + "'");
    if (fam == "gl")
        return build_root_datum(Family::GL, static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    if (fam == "sl")
        return build_root_datum(Family::SL, static_cast<std::size_t>(p), static_cast<std::size_t>(q));
    if (fam == "osp") {
        if (p != 2 || q % 2 != 0 || q == 0)
            raise(ErrorCode::UnsupportedFamily, "osp support covers osp(2|2n) only");
        return build_root_datum(Family::OSP, 1, static_cast<std::size_t>(q / 2));
    }
    raise(ErrorCode::UnsupportedFamily, "unknown family '" + fam + "'");
}

std::string algebra_name(const RootDatum& rd) {
    if (rd.family == Family::OSP)
        return "osp(2|" + std::to_string(2 * rd.n) + ")";
    return family_name(rd.family) + "(" + std::to_string(rd.m) + "|" + std::to_string(rd.n) + ")";
}

} // namespace wsc
