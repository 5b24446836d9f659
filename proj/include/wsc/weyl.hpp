#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wsc/levi.hpp"
#include "wsc/root_data.hpp"

namespace wsc {

using Perm = std::vector<std::uint8_t>;

/// Weyl group of a Levi of the even part: the product of the symmetric
/// groups of the gl blocks, acting on weight coordinates. Signed
/// permutations (osp even part, type C) are reserved and rejected here.
/// All elements are enumerated up front; the group size is bounded.
class WeylGroup {
public:
    WeylGroup(const RootDatum& rd, const LeviDatum& levi, std::size_t size_bound = 5040);

    std::size_t size() const { return elements_.size(); }
    std::size_t rank_positions() const { return degree_; }
    std::size_t identity() const { return identity_; }
    std::size_t longest() const { return longest_; }

    const Perm& perm(std::size_t idx) const { return elements_[idx]; }
    std::size_t index_of(const Perm& p) const;
    std::size_t length(std::size_t idx) const { return lengths_[idx]; }
    int sign(std::size_t idx) const { return lengths_[idx] % 2 == 0 ? 1 : -1; }

    /// (ab) means "apply b, then a".
    std::size_t multiply(std::size_t a, std::size_t b) const;
    std::size_t inverse(std::size_t a) const;

    /// Simple reflections: adjacent transpositions inside each block.
    const std::vector<std::size_t>& simples() const { return simples_; }

    bool is_left_descent(std::size_t simple, std::size_t w) const;
    bool is_right_descent(std::size_t simple, std::size_t w) const;

    /// Bruhat order, testable blockwise with the sorted-prefix criterion.
    bool bruhat_leq(std::size_t x, std::size_t w) const;

    /// Linear action on weight coordinates.
    Weight permute(std::size_t w, const Weight& v) const;

    /// Parse/format one-line notation "w(1),w(2),...", 1-based images.
    std::size_t parse_one_line(const std::string& text) const;
    std::string format_one_line(std::size_t idx) const;

    const LeviDatum& levi() const { return levi_; }

private:
    LeviDatum levi_;
    std::size_t degree_ = 0;
    std::vector<Perm> elements_;
    std::vector<std::size_t> lengths_;
    std::map<Perm, std::size_t> index_;
    std::vector<std::size_t> simples_;  // encoded as the left position i of (i, i+1)
    std::vector<std::size_t> simple_positions_;
    std::size_t identity_ = 0, longest_ = 0;
};

/// rho-shifted action w . lambda = w(lambda + rho0) - rho0.
Weight dot_action(const RootDatum& rd, const WeylGroup& W, std::size_t w, const Weight& lambda);

struct LeviDominantResult {
    bool singular = false;
    std::size_t u = 0;  // element with u . nu Levi-dominant regular
    Weight mu;          // u . nu
};

/// Finds the unique u in W_L with u . nu Levi-dominant regular, or reports
/// that nu + rho0 lies on a Levi wall.
LeviDominantResult to_levi_dominant(const RootDatum& rd, const WeylGroup& W_levi,
                                    const Weight& nu);

/// Companion used to base the Kazhdan-Lusztig expansion: the antidominant
/// representative of the dot orbit and the w with lambda = w . lambda0.
struct AntidominantResult {
    bool singular = false;
    std::size_t w = 0;
    Weight lambda0;
};
AntidominantResult to_antidominant(const RootDatum& rd, const WeylGroup& W, const Weight& lambda);

} // namespace wsc
