#pragma once

#include <cstdint>
#include <optional>

#include "wsc/character.hpp"
#include "wsc/kac.hpp"
#include "wsc/nilpotent.hpp"

namespace wsc {

/// Truncation for a job: inactive when the denominator multiset is empty
/// (every character in the run is then a Laurent polynomial), otherwise a
/// window of the given depth below the restriction of lambda - rho0 in the
/// theta direction.
TruncationSpec make_truncation(const NilpotentDatum& nd, const Weight& lambda,
                               std::int64_t depth);

/// dim L00(mu) e^{mu - rho0}|_t prod_i (1 - e^{mu_i})^{-1}; the image of a
/// parabolic Verma module under the generalized Soergel functor.
FormalCharacter char_parabolic_verma(const NilpotentDatum& nd, const Weight& mu,
                                     const TruncationSpec& spec);

/// Sum of the parabolic Verma characters against the multiplicity table:
/// the image of the simple supermodule of highest weight lambda.
FormalCharacter char_soergel_simple(const NilpotentDatum& nd, const MultiplicityTable& table,
                                    const TruncationSpec& spec);

/// Division by the orbit size: the character of one simple module of the
/// extended algebra. Raises NonIntegralDivision on an inconsistent size.
FormalCharacter char_simple_wtilde(const FormalCharacter& soergel_sum, std::int64_t orbit_size);

/// Division by prod (1 + e^{mu'_i}) over the dual Lagrangian weights: the
/// character of the corresponding simple module of the plain W-superalgebra.
FormalCharacter char_simple_w(const NilpotentDatum& nd, const FormalCharacter& wtilde_char,
                              bool lagrangian_swap);

/// Default orbit size: 1 where the component group is known trivial
/// (gl/sl nilpotents; regular nilpotent of osp(2|2n)); otherwise required.
std::int64_t resolve_orbit_size(const NilpotentDatum& nd,
                                std::optional<std::int64_t> requested);

struct CharacterRun {
    MultiplicityTable table;
    TruncationSpec trunc;
    std::int64_t orbit_size = 1;
    FormalCharacter soergel_sum;    // sum over the orbit of simples
    FormalCharacter wtilde_simple;  // one simple module of the extended algebra
    std::optional<FormalCharacter> w_simple;  // after the Clifford division
};

enum class ModuleKind { WTilde, W, W0Reference };

/// Runs the whole chain for a typical integral highest weight (or a user
/// table). ModuleKind::W0Reference replaces the super expansion by the even
/// one, giving the even-theory reference character.
CharacterRun run_character_pipeline(const NilpotentDatum& nd, const Weight& lambda,
                                    std::optional<MultiplicityTable> user_table,
                                    std::int64_t depth, ModuleKind kind,
                                    std::optional<std::int64_t> orbit_size,
                                    bool lagrangian_swap);

} // namespace wsc
