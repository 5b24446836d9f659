#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsc/super_matrix.hpp"
#include "wsc/weight.hpp"

namespace wsc {

enum class Family { GL, SL, OSP };

std::string family_name(Family f);

/// One Cartan-homogeneous basis vector of g in the matrix realization:
/// either a root vector (weight = the root) or a Cartan element (weight 0).
struct GBasisElement {
    SuperMatrix mat;
    bool odd;
    Weight weight;   // Cartan weight in eps/delta coordinates
    int z_degree;    // type-I Z-degree in {-1, 0, +1}
};

/// Root data and matrix realization for gl(m|n), sl(m|n) (m != n, realized
/// inside gl(m|n)) and osp(2|2n) (realized inside gl(2|2n); weight
/// coordinates are (eps | delta_1..delta_n), so m is stored as 1).
///
/// Positive systems: for gl/sl, eps_i - eps_j, delta_i - delta_j (i < j)
/// even and eps_i - delta_j odd; for osp(2|2n), delta_i +- delta_j (i < j)
/// and 2 delta_i even, eps +- delta_i odd. rho = rho0 - rho1 with rho0,
/// rho1 the half-sums of the even/odd positive roots.
class RootDatum {
public:
    Family family = Family::GL;
    std::size_t m = 0, n = 0;            // weight-coordinate ranks
    std::size_t even_dim = 0, odd_dim = 0;  // ambient matrix block sizes

    std::vector<Weight> even_positive_roots;
    std::vector<Weight> odd_positive_roots;
    Weight rho0, rho1, rho;

    /// Cartan-homogeneous basis of g; Cartan elements first, then root
    /// vectors in a deterministic order.
    std::vector<GBasisElement> basis;

    /// Diagonal matrices realizing the weight coordinates: entry k is the
    /// Cartan element whose coordinate vector is the k-th unit vector.
    std::vector<SuperMatrix> cartan_basis;

    std::size_t rank() const { return m + n; }

    /// Z-degree of a root: the sum of its eps-coordinates. +-1 for odd
    /// roots, 0 for even ones (the type-I compatible grading).
    int super_z_degree(const Weight& root) const;

    /// Supertrace-induced form on weights (+ on eps, - on delta up to a
    /// family constant); this is the pairing in the typicality criterion.
    Rational super_form(const Weight& a, const Weight& b) const;

    /// Positive-definite W-invariant form on the even Cartan, used for
    /// dominance tests and the Weyl dimension formula.
    Rational even_form(const Weight& a, const Weight& b) const;

    /// Diagonal matrix with the given coordinate vector.
    SuperMatrix diagonal(const CoordVector& coords) const;

    /// Coordinates of a diagonal matrix; rejects non-Cartan input.
    CoordVector diagonal_coords(const SuperMatrix& mat) const;

    Weight zero_weight() const { return Weight(rank()); }
};

RootDatum build_root_datum(Family family, std::size_t m, std::size_t n);

/// Parses "gl(m|n)", "sl(m|n)" or "osp(2|2n)".
RootDatum parse_algebra(const std::string& text);

std::string algebra_name(const RootDatum& rd);

} // namespace wsc
