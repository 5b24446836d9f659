#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wsc/kl.hpp"
#include "wsc/levi.hpp"

namespace wsc {

/// Finite integer combination of Verma characters ch M(nu), keyed by the
/// highest weight nu. Zero coefficients are pruned.
using VermaCombination = std::map<Weight, std::int64_t>;

/// <lambda + rho, beta> != 0 for every odd positive root beta, in the
/// supertrace pairing; rho = rho0 - rho1 as fixed by the matrix realization.
bool is_typical(const RootDatum& rd, const Weight& lambda);

/// Character of the simple supermodule of typical integral highest weight
/// lambda (the Kac module), expanded in the Verma basis of the even
/// category O: the Kazhdan-Lusztig expansion of ch L0(lambda), with every
/// subset of the odd positive roots shifting the Verma weights.
/// When include_odd is false, only the even expansion of ch L0(lambda) is
/// returned (the reference object of the even theory).
VermaCombination kac_character_verma_expansion(const RootDatum& rd, const WeylGroup& W_even,
                                               KLContext& kl, const Weight& lambda,
                                               bool include_odd = true);

struct MultiplicityTable {
    Weight lambda;
    std::vector<std::pair<Weight, std::int64_t>> entries;  // (lambda_i, c_i)
    std::string source;  // "computed-typical" or "user-supplied"
};

/// Regroups a Verma combination into the parabolic Verma basis of the Levi:
/// each weight is moved to its Levi-dominant representative with the sign
/// of the sorting element, singular weights drop out, and the orbit sums
/// are divided by |W_L|. Exact divisibility certifies that the input lies
/// in the span of parabolic Vermas.
MultiplicityTable to_parabolic_verma_basis(const RootDatum& rd, const WeylGroup& W_levi,
                                           const VermaCombination& vc, const Weight& lambda);

/// Inverse expansion: sum over the Levi Weyl group with alternating signs.
VermaCombination expand_parabolic_vermas(const RootDatum& rd, const WeylGroup& W_levi,
                                         const MultiplicityTable& table);

/// Convenience: typicality check, Kac expansion and regrouping in one step.
MultiplicityTable compute_multiplicity_table(const RootDatum& rd, const LeviDatum& levi,
                                             const Weight& lambda, bool include_odd = true);

MultiplicityTable load_multiplicity_table(const std::string& path, const RootDatum& rd,
                                          const LeviDatum& levi);
std::string multiplicity_table_to_json(const MultiplicityTable& table, const RootDatum& rd);

} // namespace wsc
