#include "wsc/pipeline.hpp"

namespace wsc {

TruncationSpec make_truncation(const NilpotentDatum& nd, const Weight& lambda,
                               std::int64_t depth) {
    if (nd.denominator_weights().empty()) return TruncationSpec::none();
    TorusWeight reference =
        restrict_to_torus(lambda - nd.root().rho0, nd.levi().center_basis);
    return TruncationSpec::window(nd.theta_coords(), depth, std::move(reference));
}

FormalCharacter char_parabolic_verma(const NilpotentDatum& nd, const Weight& mu,
                                     const TruncationSpec& spec) {
    const RootDatum& rd = nd.root();
    std::int64_t dim = weyl_dimension(rd, nd.levi(), mu);
    TorusWeight point = restrict_to_torus(mu - rd.rho0, nd.levi().center_basis);
    FormalCharacter out = FormalCharacter::monomial(std::move(point), dim, spec);
    for (const auto& mu_i : nd.denominator_weights())
        out = char_mul_geom_inverse(out, mu_i, -1);
    return out;
}

FormalCharacter char_soergel_simple(const NilpotentDatum& nd, const MultiplicityTable& table,
                                    const TruncationSpec& spec) {
    FormalCharacter out = FormalCharacter::zero(spec);
    for (const auto& [mu, c] : table.entries)
        out = char_add(out, char_scale(char_parabolic_verma(nd, mu, spec), c));
    return out;
}

FormalCharacter char_simple_wtilde(const FormalCharacter& soergel_sum, std::int64_t orbit_size) {
    if (orbit_size <= 0) raise(ErrorCode::ParseError, "orbit size must be positive");
    FormalCharacter out = soergel_sum;
    for (auto& [w, c] : out.terms) {
        if (c % orbit_size != 0)
            raise(ErrorCode::NonIntegralDivision,
                  "coefficient " + std::to_string(c) + " is not divisible by the orbit size " +
                      std::to_string(orbit_size));
        c /= orbit_size;
    }
    out.prune();
    return out;
}

FormalCharacter char_simple_w(const NilpotentDatum& nd, const FormalCharacter& wtilde_char,
                              bool lagrangian_swap) {
    FormalCharacter out = wtilde_char;
    for (const auto& mu_prime : nd.clifford_weights(lagrangian_swap))
        out = char_divide_one_plus(out, mu_prime);
    if (!out.trunc.active)
        for (const auto& [w, c] : out.terms)
            if (c < 0)
                raise(ErrorCode::InexactDivision,
                      "quotient has a negative coefficient; Lagrangian convention mismatch");
    return out;
}

std::int64_t resolve_orbit_size(const NilpotentDatum& nd,
                                std::optional<std::int64_t> requested) {
    if (requested) return *requested;
    if (nd.orbit_size_known()) return 1;
    raise(ErrorCode::OrbitSizeRequired,
          "the component-group orbit size is not known for this nilpotent; pass it explicitly");
}

CharacterRun run_character_pipeline(const NilpotentDatum& nd, const Weight& lambda,
                                    std::optional<MultiplicityTable> user_table,
                                    std::int64_t depth, ModuleKind kind,
                                    std::optional<std::int64_t> orbit_size,
                                    bool lagrangian_swap) {
    CharacterRun run;
    if (user_table) {
        run.table = std::move(*user_table);
    } else {
        run.table = compute_multiplicity_table(nd.root(), nd.levi(), lambda,
                                               kind != ModuleKind::W0Reference);
    }
    run.trunc = make_truncation(nd, lambda, depth);
    run.orbit_size = resolve_orbit_size(nd, orbit_size);
    run.soergel_sum = char_soergel_simple(nd, run.table, run.trunc);
    run.wtilde_simple = char_simple_wtilde(run.soergel_sum, run.orbit_size);
    if (kind == ModuleKind::W)
        run.w_simple = char_simple_w(nd, run.wtilde_simple, lagrangian_swap);
    return run;
}

} // namespace wsc
