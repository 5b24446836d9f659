#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wsc/root_data.hpp"
#include "wsc/weight.hpp"

namespace wsc {

/// A Levi subalgebra of the even part, given by compositions of the two
/// weight-coordinate ranges. The center of the Levi is the torus t over
/// which all characters are computed; its documented basis consists of the
/// block indicator diagonals (for osp, of h_eps spanning the so(2) factor).
struct LeviDatum {
    std::vector<std::size_t> even_blocks;  // composition of m
    std::vector<std::size_t> odd_blocks;   // composition of n
    std::vector<std::size_t> block_of;     // coord index -> block index
    std::vector<std::pair<std::size_t, std::size_t>> block_ranges;  // [start, end)
    std::vector<CoordVector> center_basis; // diagonal coordinates, one per basis element
    std::vector<Weight> positive_roots;    // Levi-positive even roots
    Weight rho_levi;
    bool full = false;

    std::size_t block_count() const { return block_ranges.size(); }
};

LeviDatum build_levi(const RootDatum& rd, const std::vector<std::size_t>& even_blocks,
                     const std::vector<std::size_t>& odd_blocks);

LeviDatum full_levi(const RootDatum& rd);

/// Levi format "a1+a2+...|b1+..." (block sizes). An empty string selects
/// the full even part.
LeviDatum parse_levi(const RootDatum& rd, const std::string& text);

std::string format_levi(const LeviDatum& levi);

/// Weak dominance: even_form(mu, alpha) >= 0 for every Levi-positive root.
bool is_levi_dominant(const RootDatum& rd, const LeviDatum& levi, const Weight& mu);

/// Weyl dimension formula on the Levi: prod <mu+rho_L, alpha> / <rho_L, alpha>
/// over the Levi-positive roots. Requires mu Levi-dominant integral.
std::int64_t weyl_dimension(const RootDatum& rd, const LeviDatum& levi, const Weight& mu);

} // namespace wsc
