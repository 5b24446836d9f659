#include <doctest.h>

#include <random>

#include "wsc/pipeline.hpp"

using namespace wsc;

namespace {

NilpotentDatum make_datum(const std::string& algebra, const std::string& partition,
                          const std::string& levi = "", const std::string& theta = "") {
    RootDatum rd = parse_algebra(algebra);
    LeviDatum lv = parse_levi(rd, levi);
    CoordVector th;
    if (!theta.empty()) th = parse_coords(theta, lv.center_basis.size());
    return NilpotentDatum(std::move(rd), parse_partition_pair(partition), std::move(lv), th);
}

TorusWeight tw(const std::string& text, std::size_t size) { return parse_coords(text, size); }

FormalCharacter random_char(std::mt19937& rng, std::size_t terms, const TruncationSpec& spec,
                            std::size_t rank) {
    std::uniform_int_distribution<int> coord(-6, 6), coeff(-5, 5);
    FormalCharacter fc = FormalCharacter::zero(spec);
    for (std::size_t i = 0; i < terms; ++i) {
        TorusWeight w(rank);
        for (std::size_t k = 0; k < rank; ++k) w[k] = coord(rng);
        if (fc.trunc.keeps(w)) fc.terms[w] += coeff(rng);
    }
    fc.prune();
    return fc;
}

} // namespace

TEST_CASE("series arithmetic identities") {
    TruncationSpec spec = TruncationSpec::window(tw("-1", 1), 12, tw("0", 1));
    TorusWeight mu = tw("1", 1);  // <mu, direction> = -1 < 0

    FormalCharacter one = FormalCharacter::monomial(tw("0", 1), 1, spec);
    FormalCharacter geom = char_geom_inverse(mu, -1, spec);
    FormalCharacter back = char_mul(geom, char_add(one, char_scale(
        FormalCharacter::monomial(mu, 1, spec), -1)));
    CHECK(back == one);  // (1 - e^mu)^{-1} (1 - e^mu) = 1

    FormalCharacter alt = char_geom_inverse(mu, +1, spec);
    FormalCharacter back2 = char_mul(alt, char_add(one, FormalCharacter::monomial(mu, 1, spec)));
    CHECK(back2 == one);  // (1 + e^mu)^{-1} (1 + e^mu) = 1

    CHECK(char_shift(geom, tw("0", 1)) == geom);

    CHECK_THROWS_AS(char_geom_inverse(tw("-1", 1), -1, spec), Error);  // wrong side
    CHECK_THROWS_AS(char_geom_inverse(mu, -1, TruncationSpec::none()), Error);
}

TEST_CASE("parallel product kernel matches the serial reference") {
    std::mt19937 rng(41);
    TruncationSpec window = TruncationSpec::window(tw("1,-2", 2), 15, tw("0,0", 2));
    for (int trial = 0; trial < 10; ++trial) {
        const TruncationSpec& spec = trial % 2 == 0 ? window : TruncationSpec::none();
        FormalCharacter a = random_char(rng, 60, spec, 2);
        FormalCharacter b = random_char(rng, 60, spec, 2);
        FormalCharacter serial = char_mul_serial(a, b);
        CHECK(serial == char_mul_parallel(a, b));
        CHECK(serial == char_mul(a, b));
    }
}

TEST_CASE("exact division by 1 + e^mu") {
    TruncationSpec none = TruncationSpec::none();
    TorusWeight mu = tw("-1,1", 2);

    // (1 + e^mu)(3 e^{2,0} + 5 e^{1,3}) recovered by division
    FormalCharacter q = char_add(FormalCharacter::monomial(tw("2,0", 2), 3, none),
                                 FormalCharacter::monomial(tw("1,3", 2), 5, none));
    FormalCharacter divisor =
        char_add(FormalCharacter::monomial(tw("0,0", 2), 1, none),
                 FormalCharacter::monomial(mu, 1, none));
    FormalCharacter product = char_mul(q, divisor);
    CHECK(char_divide_one_plus(product, mu) == q);

    // a bare monomial is never divisible
    CHECK_THROWS_AS(
        char_divide_one_plus(FormalCharacter::monomial(tw("0,0", 2), 1, none), mu), Error);

    // dividing by 1 + e^0 = 2 needs even coefficients
    FormalCharacter evens = FormalCharacter::monomial(tw("1,1", 2), 6, none);
    CHECK(char_divide_one_plus(evens, tw("0,0", 2)).terms.begin()->second == 3);
    CHECK_THROWS_AS(char_divide_one_plus(FormalCharacter::monomial(tw("1,1", 2), 3, none),
                                         tw("0,0", 2)),
                    Error);

    // divide-back identity on the truncated side, both expansion directions
    TruncationSpec spec = TruncationSpec::window(tw("1,-1", 2), 10, tw("0,0", 2));
    for (const char* mu_text : {"-1,1", "1,-1"}) {
        TorusWeight m = tw(mu_text, 2);
        FormalCharacter start = FormalCharacter::monomial(tw("3,3", 2), 4, spec);
        FormalCharacter quotient = char_divide_one_plus(start, m);
        FormalCharacter back = char_mul(quotient, char_add(FormalCharacter::monomial(tw("0,0", 2), 1, spec),
                                                           FormalCharacter::monomial(m, 1, spec)));
        for (const auto& [w, c] : start.terms) CHECK(back.terms.at(w) == c);
    }
    // zero pairing with a nonzero weight cannot be expanded
    CHECK_THROWS_AS(char_divide_one_plus(FormalCharacter::monomial(tw("3,3", 2), 4, spec),
                                         tw("1,1", 2)),
                    Error);
}

TEST_CASE("distinguished case gl(2|1): the full chain in closed form") {
    NilpotentDatum nd = make_datum("gl(2|1)", "2|1");
    Weight lambda = parse_weight("5,1|-3", 2, 1);
    CharacterRun run = run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W,
                                              std::nullopt, false);

    CHECK(!run.trunc.active);
    REQUIRE(run.table.entries.size() == 4);

    FormalCharacter expected = FormalCharacter::zero(TruncationSpec::none());
    expected.terms[tw("6,-3", 2)] = 5;
    expected.terms[tw("5,-2", 2)] = 10;
    expected.terms[tw("4,-1", 2)] = 5;
    CHECK(run.soergel_sum == expected);
    CHECK(run.wtilde_simple == expected);  // orbit size 1

    REQUIRE(run.w_simple.has_value());
    FormalCharacter reduced = FormalCharacter::zero(TruncationSpec::none());
    reduced.terms[tw("6,-3", 2)] = 5;
    reduced.terms[tw("5,-2", 2)] = 5;
    CHECK(*run.w_simple == reduced);

    // dimension identities
    CHECK(run.soergel_sum.evaluate_at_one() == 20);  // 2^2 * dim L00(lambda)
    CHECK(run.w_simple->evaluate_at_one() * nd.module_dimension_factor() ==
          run.wtilde_simple.evaluate_at_one());

    // multiplying the reduced character back restores the full one
    FormalCharacter divisor =
        char_add(FormalCharacter::monomial(tw("0,0", 2), 1, TruncationSpec::none()),
                 FormalCharacter::monomial(nd.clifford_weights()[0], 1, TruncationSpec::none()));
    CHECK(char_mul(*run.w_simple, divisor) == run.wtilde_simple);
}

TEST_CASE("torus Levi: a parabolic Verma character is a single shifted point") {
    NilpotentDatum nd = make_datum("gl(2|1)", "1,1|1", "1+1|1", "2,1,0");
    Weight mu = parse_weight("4,-1|3", 2, 1);
    TruncationSpec spec = make_truncation(nd, mu, 10);
    FormalCharacter fc = char_parabolic_verma(nd, mu, spec);
    // dim L00 = 1 on a torus, times the geometric factor of one denominator
    TorusWeight lead = restrict_to_torus(mu - nd.root().rho0, nd.levi().center_basis);
    CHECK(fc.terms.at(lead) == 1);
    REQUIRE(nd.denominator_weights().size() == 1);
    CHECK(fc.terms.at(lead + nd.denominator_weights()[0]) == 1);
}

TEST_CASE("zero orbit: the Clifford division is the identity") {
    NilpotentDatum nd = make_datum("gl(2|1)", "1,1|1");
    FormalCharacter fc = FormalCharacter::monomial(tw("3,1", 2), 7, TruncationSpec::none());
    CHECK(char_simple_w(nd, fc, false) == fc);
    CHECK(nd.clifford_weights().empty());
}

TEST_CASE("lagrangian swap divides by the opposite weights") {
    NilpotentDatum nd = make_datum("gl(2|1)", "2|1");
    Weight lambda = parse_weight("5,1|-3", 2, 1);
    CharacterRun swapped = run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W,
                                                  std::nullopt, true);
    REQUIRE(swapped.w_simple.has_value());
    FormalCharacter reduced = FormalCharacter::zero(TruncationSpec::none());
    reduced.terms[tw("5,-2", 2)] = 5;
    reduced.terms[tw("4,-1", 2)] = 5;
    CHECK(*swapped.w_simple == reduced);
}

TEST_CASE("w0-reference kind uses the even expansion only") {
    NilpotentDatum nd = make_datum("gl(2|1)", "2|1");
    Weight lambda = parse_weight("5,1|-3", 2, 1);
    CharacterRun run = run_character_pipeline(nd, lambda, std::nullopt, 20,
                                              ModuleKind::W0Reference, std::nullopt, false);
    // ch L0(lambda) regrouped on the full Levi is a single parabolic Verma
    REQUIRE(run.table.entries.size() == 1);
    CHECK(run.table.entries[0].first == lambda);
    CHECK(run.soergel_sum.evaluate_at_one() == 5);
    CHECK(!run.w_simple.has_value());
}

TEST_CASE("inconsistent orbit size reports NonIntegralDivision") {
    NilpotentDatum nd = make_datum("gl(2|1)", "2|1");
    Weight lambda = parse_weight("5,1|-3", 2, 1);
    try {
        run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W, 2, false);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NonIntegralDivision);
    }
}

TEST_CASE("osp requires an explicit orbit size off the regular orbit") {
    NilpotentDatum nd = make_datum("osp(2|4)", "1,1|2,2");
    try {
        resolve_orbit_size(nd, std::nullopt);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::OrbitSizeRequired);
    }
    CHECK(resolve_orbit_size(nd, 2) == 2);
    NilpotentDatum reg = make_datum("osp(2|2)", "1,1|2");
    CHECK(resolve_orbit_size(reg, std::nullopt) == 1);
}

TEST_CASE("proper Levi series: truncation stability and windowing") {
    NilpotentDatum nd = make_datum("gl(2|2)", "2|1,1", "2|1+1", "0,1,-1");
    Weight lambda = parse_weight("3,1|-2,-5", 2, 2);

    CharacterRun shallow = run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W,
                                                  std::nullopt, false);
    CharacterRun deep = run_character_pipeline(nd, lambda, std::nullopt, 30, ModuleKind::W,
                                               std::nullopt, false);
    CHECK(shallow.trunc.active);

    auto agree_on_window = [&](const FormalCharacter& a, const FormalCharacter& b) {
        for (const auto& [w, c] : a.terms) {
            REQUIRE(b.terms.count(w) == 1);
            CHECK(b.terms.at(w) == c);
        }
        for (const auto& [w, c] : b.terms)
            if (a.trunc.keeps(w)) CHECK(a.terms.count(w) == 1);
    };
    agree_on_window(shallow.soergel_sum, deep.soergel_sum);
    agree_on_window(shallow.wtilde_simple, deep.wtilde_simple);
    REQUIRE(shallow.w_simple.has_value());
    REQUIRE(deep.w_simple.has_value());
    agree_on_window(*shallow.w_simple, *deep.w_simple);

    for (const auto& [w, c] : shallow.soergel_sum.terms) CHECK(shallow.trunc.keeps(w));
}

TEST_CASE("gl(3|1) proper Levi: the frozen example is depth-stable too") {
    NilpotentDatum nd = make_datum("gl(3|1)", "2,1|1", "2+1|1", "1/3,-2/3,0");
    Weight lambda = parse_weight("4,1,-2|3", 3, 1);
    REQUIRE(is_levi_dominant(nd.root(), nd.levi(), lambda));
    CharacterRun d20 = run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W,
                                              std::nullopt, false);
    CharacterRun d30 = run_character_pipeline(nd, lambda, std::nullopt, 30, ModuleKind::W,
                                              std::nullopt, false);
    CHECK(d20.trunc.active);
    REQUIRE(d20.w_simple.has_value());
    for (const auto& [w, c] : d20.w_simple->terms) {
        REQUIRE(d30.w_simple->terms.count(w) == 1);
        CHECK(d30.w_simple->terms.at(w) == c);
    }
}

TEST_CASE("a nontrivial KL value flows through the pipeline") {
    // gl(4|1), lambda + rho0 = (9/2, 5/2, 7/2, 3/2 | 0): the even orbit
    // element is 4231, whose Schubert variety is singular, so some
    // P_{x,w}(1) = 2 enters the expansion of ch L0(lambda).
    RootDatum rd = parse_algebra("gl(4|1)");
    LeviDatum levi = parse_levi(rd, "2+2|1");
    Weight lambda = parse_weight("3,2,4,3|0", 4, 1);
    REQUIRE(is_levi_dominant(rd, levi, lambda));
    REQUIRE(is_typical(rd, lambda));

    WeylGroup W_even(rd, full_levi(rd));
    WeylGroup W_levi(rd, levi);
    KLContext kl(W_even);

    VermaCombination even = kac_character_verma_expansion(rd, W_even, kl, lambda, false);
    bool saw_two = false;
    for (const auto& [nu, c] : even) saw_two = saw_two || c == 2 || c == -2;
    CHECK(saw_two);

    VermaCombination vc = kac_character_verma_expansion(rd, W_even, kl, lambda);
    MultiplicityTable table = to_parabolic_verma_basis(rd, W_levi, vc, lambda);
    CHECK(expand_parabolic_vermas(rd, W_levi, table) == vc);

    // and the character run built on it stays exact
    NilpotentDatum nd(std::move(rd), parse_partition_pair("2,1,1|1"), std::move(levi),
                      parse_coords("1,-1,0", 3));
    CharacterRun run = run_character_pipeline(nd, lambda, table, 20, ModuleKind::W,
                                              std::nullopt, false);
    CHECK(run.trunc.active);
    REQUIRE(run.w_simple.has_value());
    CHECK(!run.w_simple->terms.empty());
}

TEST_CASE("series coefficients against a vector-partition enumeration oracle") {
    // coefficient of e^nu in dim * e^base * prod_i (1 - e^{mu_i})^{-1} is
    // dim * #{(k_i) >= 0 : sum k_i mu_i = nu - base}; enumerate tuples
    // directly and compare with the fused expansion used by the pipeline
    auto oracle_sum = [](const NilpotentDatum& nd, const MultiplicityTable& table,
                         const TruncationSpec& spec) {
        const auto denominators = nd.denominator_weights();
        FormalCharacter out = FormalCharacter::zero(spec);
        for (const auto& [mu, c] : table.entries) {
            std::int64_t dim = weyl_dimension(nd.root(), nd.levi(), mu);
            TorusWeight base = restrict_to_torus(mu - nd.root().rho0, nd.levi().center_basis);
            // depth-first over exponent tuples, pruned by the window
            auto rec = [&](auto&& self, std::size_t i, const TorusWeight& at) -> void {
                if (!spec.keeps(at)) return;
                if (i == denominators.size()) {
                    out.terms[at] += c * dim;
                    return;
                }
                TorusWeight cursor = at;
                while (spec.keeps(cursor)) {
                    self(self, i + 1, cursor);
                    cursor += denominators[i];
                }
            };
            rec(rec, 0, base);
        }
        out.prune();
        return out;
    };

    struct Job {
        std::string algebra, partition, levi, theta, lambda;
    };
    for (const Job& job : {Job{"gl(2|2)", "2|1,1", "2|1+1", "0,1,-1", "3,1|-2,-5"},
                           Job{"gl(4|1)", "2,1,1|1", "2+2|1", "1,-1,0", "3,2,4,3|0"}}) {
        NilpotentDatum nd = make_datum(job.algebra, job.partition, job.levi, job.theta);
        const RootDatum& rd = nd.root();
        Weight lambda = parse_weight(job.lambda, rd.m, rd.n);
        MultiplicityTable table = compute_multiplicity_table(rd, nd.levi(), lambda);
        TruncationSpec spec = make_truncation(nd, lambda, 12);
        REQUIRE(spec.active);
        FormalCharacter fused = char_soergel_simple(nd, table, spec);
        FormalCharacter enumerated = oracle_sum(nd, table, spec);
        CHECK(fused == enumerated);
    }
}

TEST_CASE("user-supplied table drives the pipeline") {
    NilpotentDatum nd = make_datum("gl(2|1)", "2|1");
    MultiplicityTable table;
    table.lambda = parse_weight("5,1|-3", 2, 1);
    table.source = "user-supplied";
    table.entries = {{parse_weight("5,1|-3", 2, 1), 1}};
    CharacterRun run = run_character_pipeline(nd, table.lambda, table, 20, ModuleKind::WTilde,
                                              std::nullopt, false);
    CHECK(run.soergel_sum.evaluate_at_one() == 5);  // single Weyl dimension
    CHECK(run.table.source == "user-supplied");
}
