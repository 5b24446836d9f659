#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsc/levi.hpp"
#include "wsc/root_data.hpp"
#include "wsc/super_matrix.hpp"

namespace wsc {

/// Jordan types of the nilpotent, one partition per even factor. For
/// gl/sl(m|n) these are partitions of m and n. For osp(2|2n) the first
/// partition must be 1,1 (the so(2) factor has no nonzero nilpotent) and
/// the second is a partition of 2n whose odd parts have even multiplicity.
struct PartitionPair {
    std::vector<std::size_t> part_m;
    std::vector<std::size_t> part_n;
};

/// Partition format "p1,p2,...|q1,q2,...".
PartitionPair parse_partition_pair(const std::string& text);
std::string format_partition_pair(const PartitionPair& p);

/// A vector of g homogeneous for parity, the Z-degree, the ad(h)-grading
/// and the t-weight grading at once.
struct HomogeneousVector {
    SuperMatrix mat;
    bool odd = false;
    int z_degree = 0;
    int h_degree = 0;
    TorusWeight t_weight;
};

/// Everything derived from a nilpotent orbit representative: the sl2-triple,
/// the good Z-grading, the centralizer g^e, the symplectic superspace
/// V = [f, g], the odd Lagrangian halves, and the two weight multisets that
/// enter the character formulas.
class NilpotentDatum {
public:
    NilpotentDatum(RootDatum rd, PartitionPair partition, LeviDatum levi,
                   CoordVector theta_coords);

    const RootDatum& root() const { return root_; }
    const PartitionPair& partition() const { return partition_; }
    const LeviDatum& levi() const { return levi_; }
    const CoordVector& theta_coords() const { return theta_coords_; }
    const CoordVector& theta_cartan() const { return theta_cartan_; }

    const SuperMatrix& e() const { return e_; }
    const SuperMatrix& h() const { return h_; }
    const SuperMatrix& f() const { return f_; }

    const std::vector<HomogeneousVector>& graded_basis() const { return graded_basis_; }
    const std::vector<HomogeneousVector>& centralizer() const { return centralizer_; }
    const std::vector<HomogeneousVector>& symplectic_space() const { return v_space_; }
    const std::vector<HomogeneousVector>& u1() const { return u1_; }
    const std::vector<HomogeneousVector>& u1_dual() const { return u1_dual_; }

    /// ker(ad e) intersected with the requested graded pieces; either
    /// filter may be left empty.
    std::vector<HomogeneousVector> centralizer_basis(std::optional<bool> odd,
                                                     std::optional<int> degree) const;

    /// degree -> (even dim, odd dim)
    std::map<int, std::pair<std::size_t, std::size_t>> grading_dims() const;
    std::map<int, std::pair<std::size_t, std::size_t>> centralizer_dims() const;

    std::size_t dim_v_even() const;
    std::size_t dim_v_odd() const;

    /// chi(x) = (e, x)
    Rational chi_of(const SuperMatrix& x) const { return chi(x, e_); }
    /// omega(x, y) = chi([x, y])
    Rational omega(const SuperMatrix& x, const SuperMatrix& y) const {
        return chi_of(bracket(x, y));
    }

    /// 2^{dim u1}, the dimension ratio between a module and its reduction.
    std::int64_t module_dimension_factor() const;

    /// t-weights on the strictly negative ad(theta)-eigenspaces of the even
    /// centralizer of e; every entry pairs negatively with theta.
    std::vector<TorusWeight> denominator_weights() const;

    /// t-weights of the dual Lagrangian half (of u1 when swapped).
    std::vector<TorusWeight> clifford_weights(bool lagrangian_swap = false) const;

    /// Default component-group orbit size: 1 for gl/sl (all nilpotents) and
    /// for the regular nilpotent of osp(2|2n); unknown otherwise.
    bool orbit_size_known() const;

    /// Admissibility of (Levi, theta) beyond the local checks performed here
    /// is not verified; carried as a caveat into every report.
    static const char* levi_caveat();

private:
    void build_sl2();
    void build_graded_basis();
    void build_centralizer_and_v();
    std::vector<Rational> coordinatize(const SuperMatrix& mat) const;

    RootDatum root_;
    PartitionPair partition_;
    LeviDatum levi_;
    CoordVector theta_coords_;
    CoordVector theta_cartan_;
    SuperMatrix e_, h_, f_;
    CoordVector h_coords_;
    std::vector<HomogeneousVector> graded_basis_;
    std::vector<HomogeneousVector> centralizer_;
    std::vector<HomogeneousVector> v_space_;
    std::vector<HomogeneousVector> u1_, u1_dual_;
};

std::vector<std::vector<std::size_t>> partitions_of(std::size_t k);

/// Gate for V = [f, g]: raises OddDimensionalOddPart when the odd part of
/// g(-1) has odd dimension (the adjusted symplectic space is out of scope).
/// For gl(m|n) and osp(2|2n) Jordan data the dimension is always even
/// because the h-eigenvalue multisets on both sides are symmetric, but the
/// contract is checked on every build.
void require_even_odd_minus_one(std::size_t dim_g_minus1_odd);

} // namespace wsc
