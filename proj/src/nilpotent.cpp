#include "wsc/nilpotent.hpp"

#include <algorithm>
#include <sstream>

#include "wsc/linalg.hpp"

namespace wsc {

namespace {

std::vector<std::size_t> parse_parts(const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        long v = -1;
        try {
            v = std::stol(item);
        } catch (const std::exception&) {
        }
        if (v <= 0) raise(ErrorCode::ParseError, "bad partition part '" + item + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

void validate_partition(const std::vector<std::size_t>& parts, std::size_t sum,
                        const char* which) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0 || (i > 0 && parts[i] > parts[i - 1]))
            raise(ErrorCode::InvalidPartition,
                  std::string(which) + " partition is not weakly decreasing positive");
        total += parts[i];
    }
    if (total != sum)
        raise(ErrorCode::InvalidPartition, std::string(which) + " partition does not sum to " +
                                               std::to_string(sum));
}

struct Sl2Triple {
    SuperMatrix e, h, f;
};

// Jordan strings on consecutive index ranges; h gets the standard weights
// k-1, k-3, ..., 1-k along each string and f the coefficients i(k-i).
void add_jordan_string(SuperMatrix& e, SuperMatrix& h, SuperMatrix& f,
                       std::size_t start, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i)
        h.at(start + i, start + i) = rat(static_cast<long>(k) - 1 - 2 * static_cast<long>(i));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        e.at(start + i, start + i + 1) = 1;
        f.at(start + i + 1, start + i) =
            rat(static_cast<long>(i + 1) * (static_cast<long>(k) - 1 - static_cast<long>(i)));
    }
}

Sl2Triple build_gl_sl2(const RootDatum& rd, const PartitionPair& p) {
    SuperMatrix e(rd.even_dim, rd.odd_dim), h(rd.even_dim, rd.odd_dim), f(rd.even_dim, rd.odd_dim);
    std::size_t pos = 0;
    for (std::size_t k : p.part_m) {
        add_jordan_string(e, h, f, pos, k);
        pos += k;
    }
    pos = rd.m;
    for (std::size_t k : p.part_n) {
        add_jordan_string(e, h, f, pos, k);
        pos += k;
    }
    return {e, h, f};
}

// sl2-triple in sp(2n) for a symplectic partition: build the standard model
// (Jordan strings with an alternating pairing inside each indecomposable
// block), then relabel the basis into the fixed antidiagonal form.
Sl2Triple build_osp_sl2(const RootDatum& rd, const PartitionPair& p) {
    std::size_t n = rd.n;
    std::size_t dim = 2 * n;

    std::vector<Rational> e_model(dim * dim), h_model(dim), f_model(dim * dim);
    // pairing[i] = (partner index, value of <w_i, w_partner>)
    std::vector<std::pair<std::size_t, Rational>> pairing(dim, {0, Rational(0)});

    auto add_string = [&](std::size_t start, std::size_t k) {
        for (std::size_t i = 0; i < k; ++i)
            h_model[start + i] = rat(static_cast<long>(k) - 1 - 2 * static_cast<long>(i));
        for (std::size_t i = 0; i + 1 < k; ++i) {
            e_model[(start + i) * dim + (start + i + 1)] = 1;
            f_model[(start + i + 1) * dim + (start + i)] =
                rat(static_cast<long>(i + 1) * (static_cast<long>(k) - 1 - static_cast<long>(i)));
        }
    };

    std::size_t pos = 0;
    std::vector<std::size_t> odd_parts;
    for (std::size_t k : p.part_n) {
        if (k % 2 == 0) {
            // one even part: single string, <w_i, w_{2k-1-i}> = (-1)^i
            add_string(pos, k);
            for (std::size_t i = 0; i < k; ++i)
                pairing[pos + i] = {pos + k - 1 - i, rat(i % 2 == 0 ? 1 : -1)};
            pos += k;
        } else {
            odd_parts.push_back(k);
        }
    }
    if (odd_parts.size() % 2 != 0)
        raise(ErrorCode::InvalidPartition,
              "odd parts of a symplectic partition must have even multiplicity");
    for (std::size_t t = 0; t + 1 < odd_parts.size(); t += 2) {
        std::size_t k = odd_parts[t];
        if (odd_parts[t + 1] != k)
            raise(ErrorCode::InvalidPartition,
                  "odd parts of a symplectic partition must have even multiplicity");
        // paired odd parts: two strings u, u' with <u_i, u'_{k-1-i}> = (-1)^i
        add_string(pos, k);
        add_string(pos + k, k);
        for (std::size_t i = 0; i < k; ++i) {
            Rational v = rat(i % 2 == 0 ? 1 : -1);
            pairing[pos + i] = {pos + k + (k - 1 - i), v};
            pairing[pos + k + (k - 1 - i)] = {pos + i, -v};
        }
        pos += 2 * k;
    }

    // Relabel: assign pair r to global odd-block positions (r, 2n-1-r) so
    // that the model pairing matches B1 exactly. Model vector v keeps scale
    // 1; its partner is rescaled so the pairing value becomes +1.
    std::vector<std::size_t> global_of(dim);
    std::vector<Rational> scale(dim);
    std::vector<bool> used(dim, false);
    std::size_t r = 0;
    for (std::size_t v = 0; v < dim; ++v) {
        if (used[v]) continue;
        auto [partner, value] = pairing[v];
        used[v] = used[partner] = true;
        global_of[v] = r;
        scale[v] = 1;
        global_of[partner] = dim - 1 - r;
        scale[partner] = 1 / value;
        ++r;
    }

    auto to_global = [&](const std::vector<Rational>& model, SuperMatrix& out) {
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                if (model[a * dim + b] == 0) continue;
                out.at(2 + global_of[a], 2 + global_of[b]) =
                    (scale[b] / scale[a]) * model[a * dim + b];
            }
    };

    SuperMatrix e(2, dim), h(2, dim), f(2, dim);
    to_global(e_model, e);
    to_global(f_model, f);
    for (std::size_t a = 0; a < dim; ++a) h.at(2 + global_of[a], 2 + global_of[a]) = h_model[a];
    return {e, h, f};
}

} // namespace

PartitionPair parse_partition_pair(const std::string& text) {
    std::string left = text, right;
    auto bar = text.find('|');
    if (bar != std::string::npos) {
        left = text.substr(0, bar);
        right = text.substr(bar + 1);
    }
    return {parse_parts(left), parse_parts(right)};
}

std::string format_partition_pair(const PartitionPair& p) {
    std::string out;
    for (std::size_t i = 0; i < p.part_m.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.part_m[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < p.part_n.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.part_n[i]);
    }
    return out;
}

NilpotentDatum::NilpotentDatum(RootDatum rd, PartitionPair partition, LeviDatum levi,
                               CoordVector theta_coords)
    : root_(std::move(rd)), partition_(std::move(partition)), levi_(std::move(levi)),
      theta_coords_(std::move(theta_coords)) {
    if (theta_coords_.size() == 0) theta_coords_ = CoordVector(levi_.center_basis.size());
    if (theta_coords_.size() != levi_.center_basis.size())
        raise(ErrorCode::ParseError, "theta has one coordinate per Levi-center basis element");
    theta_cartan_ = CoordVector(root_.rank());
    for (std::size_t k = 0; k < levi_.center_basis.size(); ++k)
        theta_cartan_ += theta_coords_[k] * levi_.center_basis[k];

    build_sl2();
    build_graded_basis();
    build_centralizer_and_v();
}

void NilpotentDatum::build_sl2() {
    if (root_.family == Family::OSP) {
        validate_partition(partition_.part_m, 2, "even");
        if (!(partition_.part_m.size() == 2 && partition_.part_m[0] == 1))
            raise(ErrorCode::InvalidPartition,
                  "the so(2) factor of osp(2|2n) admits only the trivial Jordan type 1,1");
        validate_partition(partition_.part_n, 2 * root_.n, "symplectic");
        Sl2Triple t = build_osp_sl2(root_, partition_);
        e_ = t.e;
        h_ = t.h;
        f_ = t.f;
    } else {
        validate_partition(partition_.part_m, root_.m, "even");
        validate_partition(partition_.part_n, root_.n, "odd-side");
        Sl2Triple t = build_gl_sl2(root_, partition_);
        e_ = t.e;
        h_ = t.h;
        f_ = t.f;

        // e must live inside the chosen Levi
        for (std::size_t r = 0; r < e_.total(); ++r)
            for (std::size_t c = 0; c < e_.total(); ++c)
                if (e_.at(r, c) != 0 && levi_.block_of[r] != levi_.block_of[c])
                    raise(ErrorCode::NilpotentNotInLevi,
                          "nilpotent has a Jordan string crossing a Levi block");
    }

    if (!(bracket(h_, e_) == rat(2) * e_) || !(bracket(h_, f_) == rat(-2) * f_) ||
        !(bracket(e_, f_) == h_))
        raise(ErrorCode::Generic, "sl2 relations failed");
    // membership in the algebra span; for osp this certifies that the
    // relabeled triple still preserves the form
    coordinatize(e_);
    coordinatize(f_);
    h_coords_ = root_.diagonal_coords(h_);

    // ad(theta) must have integer eigenvalues on the even part
    for (const auto& el : root_.basis) {
        if (el.odd) continue;
        if (!is_integer(dot(el.weight, theta_cartan_)))
            raise(ErrorCode::NonIntegralTheta,
                  "theta has a non-integer eigenvalue on the even part");
    }
}

void NilpotentDatum::build_graded_basis() {
    for (const auto& el : root_.basis) {
        Rational deg = dot(el.weight, h_coords_);
        if (!is_integer(deg))
            raise(ErrorCode::NonIntegralGrading, "non-integral ad(h) eigenvalue");
        HomogeneousVector v;
        v.mat = el.mat;
        v.odd = el.odd;
        v.z_degree = el.z_degree;
        v.h_degree = static_cast<int>(to_int64(deg));
        v.t_weight = restrict_to_torus(el.weight, levi_.center_basis);
        graded_basis_.push_back(std::move(v));
    }
}

std::vector<Rational> NilpotentDatum::coordinatize(const SuperMatrix& mat) const {
    std::size_t d = mat.total();
    std::size_t dim = root_.basis.size();
    RatMatrix sys(d * d, dim + 1);
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                sys.at(r * d + c, k) = root_.basis[k].mat.at(r, c);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) sys.at(r * d + c, dim) = mat.at(r, c);
    auto pivots = sys.rref();
    std::vector<Rational> coords(dim);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == dim)
            raise(ErrorCode::Generic, "matrix is not in the algebra span");
        coords[pivots[i]] = sys.at(i, dim);
    }
    return coords;
}

void NilpotentDatum::build_centralizer_and_v() {
    // group indices of the graded basis by (odd, z, h-degree, t-weight)
    struct Key {
        bool odd;
        int z;
        int h;
        TorusWeight t;
        bool operator<(const Key& o) const {
            if (odd != o.odd) return odd < o.odd;
            if (z != o.z) return z < o.z;
            if (h != o.h) return h < o.h;
            return t < o.t;
        }
    };
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < graded_basis_.size(); ++i) {
        const auto& v = graded_basis_[i];
        groups[{v.odd, v.z_degree, v.h_degree, v.t_weight}].push_back(i);
    }

    // dim g(-1)_odd must be even before V = [f, g] is usable
    std::size_t odd_minus_one = 0;
    for (const auto& v : graded_basis_)
        if (v.odd && v.h_degree == -1) ++odd_minus_one;
    require_even_odd_minus_one(odd_minus_one);

    auto group_coords = [&](const SuperMatrix& mat, const Key& key) {
        std::vector<Rational> full = coordinatize(mat);
        auto it = groups.find(key);
        std::vector<Rational> out(it == groups.end() ? 0 : it->second.size());
        std::vector<bool> seen(full.size(), false);
        if (it != groups.end())
            for (std::size_t j = 0; j < it->second.size(); ++j) {
                out[j] = full[it->second[j]];
                seen[it->second[j]] = true;
            }
        for (std::size_t k = 0; k < full.size(); ++k)
            if (full[k] != 0 && !seen[k])
                raise(ErrorCode::Generic, "bracket left its graded piece");
        return out;
    };

    for (const auto& [key, members] : groups) {
        // kernel of ad(e): group -> (h+2) group
        Key up{key.odd, key.z, key.h + 2, key.t};
        std::size_t up_size = groups.count(up) ? groups[up].size() : 0;
        RatMatrix ad_e(std::max<std::size_t>(up_size, 1), members.size());
        for (std::size_t j = 0; j < members.size(); ++j) {
            SuperMatrix br = bracket(e_, graded_basis_[members[j]].mat);
            if (!br.is_zero()) {
                auto coords = group_coords(br, up);
                for (std::size_t r = 0; r < coords.size(); ++r) ad_e.at(r, j) = coords[r];
            }
        }
        for (const auto& kernel_vec : ad_e.kernel_basis()) {
            HomogeneousVector v;
            v.mat = SuperMatrix(root_.even_dim, root_.odd_dim);
            for (std::size_t j = 0; j < members.size(); ++j)
                if (kernel_vec[j] != 0) v.mat += kernel_vec[j] * graded_basis_[members[j]].mat;
            v.odd = key.odd;
            v.z_degree = key.z;
            v.h_degree = key.h;
            v.t_weight = key.t;
            centralizer_.push_back(std::move(v));
        }

        // image of ad(f): group -> (h-2) group
        Key down{key.odd, key.z, key.h - 2, key.t};
        if (!groups.count(down)) {
            for (std::size_t j = 0; j < members.size(); ++j)
                if (!bracket(f_, graded_basis_[members[j]].mat).is_zero())
                    raise(ErrorCode::Generic, "bracket left its graded piece");
            continue;
        }
        const auto& target = groups[down];
        RatMatrix image_rows(members.size(), target.size());
        for (std::size_t j = 0; j < members.size(); ++j) {
            SuperMatrix br = bracket(f_, graded_basis_[members[j]].mat);
            if (br.is_zero()) continue;
            auto coords = group_coords(br, down);
            for (std::size_t c = 0; c < coords.size(); ++c) image_rows.at(j, c) = coords[c];
        }
        image_rows.rref();
        for (std::size_t rrow = 0; rrow < image_rows.rows(); ++rrow) {
            bool nonzero = false;
            for (std::size_t c = 0; c < target.size(); ++c)
                if (image_rows.at(rrow, c) != 0) nonzero = true;
            if (!nonzero) continue;
            HomogeneousVector v;
            v.mat = SuperMatrix(root_.even_dim, root_.odd_dim);
            for (std::size_t c = 0; c < target.size(); ++c)
                if (image_rows.at(rrow, c) != 0)
                    v.mat += image_rows.at(rrow, c) * graded_basis_[target[c]].mat;
            v.odd = key.odd;
            v.z_degree = key.z;
            v.h_degree = key.h - 2;
            v.t_weight = key.t;
            v_space_.push_back(std::move(v));
        }
    }

    // goodness of the grading: g^e sits in nonnegative degrees
    for (const auto& v : centralizer_)
        if (v.h_degree < 0) raise(ErrorCode::Generic, "grading is not good: g^e in negative degree");

    if (centralizer_.size() + v_space_.size() != graded_basis_.size())
        raise(ErrorCode::Generic, "g does not split as [f,g] + g^e");

    // omega must be nondegenerate on V
    {
        RatMatrix gram(v_space_.size(), v_space_.size());
        for (std::size_t i = 0; i < v_space_.size(); ++i)
            for (std::size_t j = 0; j < v_space_.size(); ++j)
                gram.at(i, j) = omega(v_space_[i].mat, v_space_[j].mat);
        if (gram.rank() != v_space_.size())
            raise(ErrorCode::Generic, "omega degenerates on V");
    }

    for (const auto& v : v_space_) {
        if (!v.odd) continue;
        if (v.z_degree == 1) u1_.push_back(v);
        else if (v.z_degree == -1) u1_dual_.push_back(v);
        else raise(ErrorCode::NotTypeI, "odd vector of Z-degree 0");
    }
    if (u1_.size() != u1_dual_.size() || 2 * u1_.size() != dim_v_odd())
        raise(ErrorCode::Generic, "odd Lagrangian halves are unbalanced");

    // u1 is omega-isotropic (forced in type I) and pairs nondegenerately
    // with its dual half.
    for (std::size_t i = 0; i < u1_.size(); ++i)
        for (std::size_t j = 0; j < u1_.size(); ++j) {
            if (omega(u1_[i].mat, u1_[j].mat) != 0 ||
                omega(u1_dual_[i].mat, u1_dual_[j].mat) != 0)
                raise(ErrorCode::Generic, "Lagrangian half is not isotropic");
        }
    if (!u1_.empty()) {
        RatMatrix pair_gram(u1_.size(), u1_.size());
        for (std::size_t i = 0; i < u1_.size(); ++i)
            for (std::size_t j = 0; j < u1_.size(); ++j)
                pair_gram.at(i, j) = omega(u1_[i].mat, u1_dual_[j].mat);
        if (pair_gram.rank() != u1_.size())
            raise(ErrorCode::Generic, "Lagrangian pairing degenerates");
    }
}

std::vector<HomogeneousVector> NilpotentDatum::centralizer_basis(
    std::optional<bool> odd, std::optional<int> degree) const {
    std::vector<HomogeneousVector> out;
    for (const auto& v : centralizer_) {
        if (odd && v.odd != *odd) continue;
        if (degree && v.h_degree != *degree) continue;
        out.push_back(v);
    }
    return out;
}

std::map<int, std::pair<std::size_t, std::size_t>> NilpotentDatum::grading_dims() const {
    std::map<int, std::pair<std::size_t, std::size_t>> dims;
    for (const auto& v : graded_basis_) {
        auto& slot = dims[v.h_degree];
        if (v.odd) ++slot.second;
        else ++slot.first;
    }
    return dims;
}

std::map<int, std::pair<std::size_t, std::size_t>> NilpotentDatum::centralizer_dims() const {
    std::map<int, std::pair<std::size_t, std::size_t>> dims;
    for (const auto& v : centralizer_) {
        auto& slot = dims[v.h_degree];
        if (v.odd) ++slot.second;
        else ++slot.first;
    }
    return dims;
}

std::size_t NilpotentDatum::dim_v_even() const {
    std::size_t d = 0;
    for (const auto& v : v_space_)
        if (!v.odd) ++d;
    return d;
}

std::size_t NilpotentDatum::dim_v_odd() const {
    std::size_t d = 0;
    for (const auto& v : v_space_)
        if (v.odd) ++d;
    return d;
}

std::int64_t NilpotentDatum::module_dimension_factor() const {
    if (u1_.size() >= 63) raise(ErrorCode::Generic, "dimension factor overflows");
    return std::int64_t{1} << u1_.size();
}

std::vector<TorusWeight> NilpotentDatum::denominator_weights() const {
    std::vector<TorusWeight> out;
    for (const auto& v : centralizer_) {
        if (v.odd) continue;
        if (dot(v.t_weight, theta_coords_) < 0) out.push_back(v.t_weight);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<TorusWeight> NilpotentDatum::clifford_weights(bool lagrangian_swap) const {
    std::vector<TorusWeight> out;
    for (const auto& v : (lagrangian_swap ? u1_ : u1_dual_)) out.push_back(v.t_weight);
    std::sort(out.begin(), out.end());
    return out;
}

bool NilpotentDatum::orbit_size_known() const {
    if (root_.family != Family::OSP) return true;
    // regular nilpotent of sp(2n): a single Jordan block
    return partition_.part_n.size() == 1;
}

const char* NilpotentDatum::levi_caveat() {
    return "admissibility of (Levi, theta) beyond 'e in Levi, theta central with "
           "integral even eigenvalues' is not checked";
}

void require_even_odd_minus_one(std::size_t dim_g_minus1_odd) {
    if (dim_g_minus1_odd % 2 != 0)
        raise(ErrorCode::OddDimensionalOddPart,
              "dim g(-1) of the odd part is odd; the adjusted symplectic space is out of scope");
}

std::vector<std::vector<std::size_t>> partitions_of(std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    // descending enumeration, largest part first
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, k, k == 0 ? 1 : k);
    return out;
}

} // namespace wsc
