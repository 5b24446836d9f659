#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "wsc/kac.hpp"

using namespace wsc;

namespace {

struct Setup {
    RootDatum rd;
    LeviDatum levi;
    WeylGroup W_even;
    WeylGroup W_levi;
    KLContext kl;

    Setup(const std::string& algebra, const std::string& levi_text)
        : rd(parse_algebra(algebra)), levi(parse_levi(rd, levi_text)),
          W_even(rd, full_levi(rd)), W_levi(rd, levi), kl(W_even) {}
};

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << body;
    return path;
}

} // namespace

TEST_CASE("typicality") {
    RootDatum rd11 = parse_algebra("gl(1|1)");
    CHECK(is_typical(rd11, parse_weight("3|4", 1, 1)));       // a + b != 0
    CHECK(!is_typical(rd11, parse_weight("3|-3", 1, 1)));

    RootDatum rd21 = parse_algebra("gl(2|1)");
    // lambda + rho = (5,0|-2): pairings 3 and -2
    CHECK(is_typical(rd21, parse_weight("5,1|-3", 2, 1)));
    // lambda + rho = (3,0|-3): pairing with eps1 - delta vanishes
    CHECK(!is_typical(rd21, parse_weight("3,1|-4", 2, 1)));
}

TEST_CASE("gl(1|1): Kac character has two Verma terms") {
    Setup s("gl(1|1)", "");
    Weight lambda = parse_weight("2|5", 1, 1);
    VermaCombination vc = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda);
    REQUIRE(vc.size() == 2);
    CHECK(vc.at(lambda) == 1);
    CHECK(vc.at(parse_weight("1|6", 1, 1)) == 1);  // lambda - (eps - delta)
}

TEST_CASE("gl(2|1): dominant typical weight gives 8 signed Verma terms") {
    Setup s("gl(2|1)", "");
    Weight lambda = parse_weight("5,1|-3", 2, 1);
    VermaCombination vc = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda);
    // 2 even terms and 4 odd subsets, no collisions for this lambda
    CHECK(vc.size() == 8);
    std::int64_t plus = 0, minus = 0;
    for (const auto& [w, c] : vc) (c > 0 ? plus : minus) += c;
    CHECK(plus == 4);
    CHECK(minus == -4);
    CHECK(vc.at(lambda) == 1);

    // restricting to the empty odd subset reproduces the even expansion
    VermaCombination even = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda, false);
    REQUIRE(even.size() == 2);
    CHECK(even.at(lambda) == 1);
    for (const auto& [w, c] : even) CHECK(vc.count(w) == 1);
}

TEST_CASE("atypical and singular weights are rejected") {
    Setup s("gl(2|1)", "");
    CHECK_THROWS_AS(
        kac_character_verma_expansion(s.rd, s.W_even, s.kl, parse_weight("3,1|-4", 2, 1)),
        Error);
    try {
        kac_character_verma_expansion(s.rd, s.W_even, s.kl, parse_weight("3,1|-4", 2, 1));
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::AtypicalWeight);
    }
    // lambda + rho0 = (b - 1/2, b - 1/2 | *): even-singular
    try {
        kac_character_verma_expansion(s.rd, s.W_even, s.kl, parse_weight("2,3|7", 2, 1));
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::SingularWeight);
    }
    CHECK_THROWS_AS(
        kac_character_verma_expansion(s.rd, s.W_even, s.kl, parse_weight("1/2,0|1", 2, 1)),
        Error);
}

TEST_CASE("regrouping: torus Levi is the identity regrouping") {
    Setup s("gl(1|1)", "");
    Weight lambda = parse_weight("4|-1", 1, 1);
    VermaCombination vc = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda);
    MultiplicityTable table = to_parabolic_verma_basis(s.rd, s.W_levi, vc, lambda);
    CHECK(table.entries.size() == vc.size());
    for (const auto& [mu, c] : table.entries) CHECK(vc.at(mu) == c);
}

TEST_CASE("regrouping: gl(2|1) full Levi gives four entries with coefficient 1") {
    Setup s("gl(2|1)", "");
    Weight lambda = parse_weight("5,1|-3", 2, 1);
    VermaCombination vc = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda);
    MultiplicityTable table = to_parabolic_verma_basis(s.rd, s.W_levi, vc, lambda);
    REQUIRE(table.entries.size() == 4);
    for (const auto& [mu, c] : table.entries) {
        CHECK(c == 1);
        CHECK(is_levi_dominant(s.rd, s.levi, mu));
    }
    CHECK(table.entries.front().first == lambda);  // sorted leading weight first
}

TEST_CASE("regrouping drops singular terms, which cancel pairwise anyway") {
    Setup s("gl(2|1)", "");
    // lambda = (b, b | c): the subset {eps1 - delta} lands on a wall
    Weight lambda = parse_weight("2,2|3", 2, 1);
    VermaCombination vc = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda);
    for (const auto& [nu, c] : vc) {
        LeviDominantResult rep = to_levi_dominant(s.rd, s.W_levi, nu);
        if (rep.singular) CHECK(c == 0);  // net cancellation before the drop
    }
    MultiplicityTable table = to_parabolic_verma_basis(s.rd, s.W_levi, vc, lambda);
    CHECK(table.entries.size() == 3);
}

TEST_CASE("Kac dimension identity: sum c_i dim = 2^{#odd roots} dim") {
    for (const auto& [algebra, lambda_text] :
         std::vector<std::pair<std::string, std::string>>{
             {"gl(2|1)", "5,1|-3"}, {"gl(2|1)", "7,2|1"}, {"gl(2|2)", "3,1|-2,-5"}}) {
        RootDatum rd = parse_algebra(algebra);
        LeviDatum levi = full_levi(rd);
        Weight lambda = parse_weight(lambda_text, rd.m, rd.n);
        MultiplicityTable table = compute_multiplicity_table(rd, levi, lambda);
        std::int64_t total = 0;
        for (const auto& [mu, c] : table.entries) total += c * weyl_dimension(rd, levi, mu);
        std::int64_t expected = weyl_dimension(rd, levi, lambda)
                                << rd.odd_positive_roots.size();
        CHECK(total == expected);
    }
}

TEST_CASE("round trip: regroup then re-expand returns the Kac expansion") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> gap(0, 3), base(-4, 4);
    for (const auto& [algebra, levi_text] :
         std::vector<std::pair<std::string, std::string>>{
             {"gl(2|1)", ""}, {"gl(2|1)", "1+1|1"}, {"gl(2|2)", "2|1+1"}, {"gl(3|1)", "2+1|1"}}) {
        Setup s(algebra, levi_text);
        int produced = 0;
        while (produced < 10) {
            // random Levi-dominant integral weight (decreasing within each
            // block, blocks independent), then skip non-typical ones
            Weight lambda(s.rd.rank());
            for (auto [start, end] : s.levi.block_ranges) {
                long value = base(rng);
                for (std::size_t i = start; i < end; ++i) {
                    lambda[i] = value;
                    value -= gap(rng);
                }
            }
            if (!is_typical(s.rd, lambda)) continue;
            VermaCombination vc;
            try {
                vc = kac_character_verma_expansion(s.rd, s.W_even, s.kl, lambda);
            } catch (const Error& err) {
                CHECK(err.code() == ErrorCode::SingularWeight);
                continue;
            }
            ++produced;
            MultiplicityTable table = to_parabolic_verma_basis(s.rd, s.W_levi, vc, lambda);
            VermaCombination back = expand_parabolic_vermas(s.rd, s.W_levi, table);
            CHECK(back == vc);
        }
    }
}

TEST_CASE("multiplicity table JSON load/validate") {
    RootDatum rd = parse_algebra("gl(2|1)");
    LeviDatum levi = full_levi(rd);

    std::string good = write_temp("wsc_table_good.json", R"({
        "lambda": "5,1|-3",
        "entries": [{"weight": "5,1|-3", "coeff": 1}, {"weight": "4,1|-2", "coeff": 1}],
        "source": "user-supplied"
    })");
    MultiplicityTable table = load_multiplicity_table(good, rd, levi);
    CHECK(table.entries.size() == 2);
    CHECK(table.source == "user-supplied");

    std::string bad_dom = write_temp("wsc_table_baddom.json", R"({
        "lambda": "5,1|-3",
        "entries": [{"weight": "1,5|-3", "coeff": 1}]
    })");
    try {
        load_multiplicity_table(bad_dom, rd, levi);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NotDominant);
    }

    std::string empty = write_temp("wsc_table_empty.json", R"({"lambda": "5,1|-3", "entries": []})");
    try {
        load_multiplicity_table(empty, rd, levi);
        CHECK(false);
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::ParseError);
    }

    std::string mangled = write_temp("wsc_table_mangled.json", "{not json");
    CHECK_THROWS_AS(load_multiplicity_table(mangled, rd, levi), Error);
    CHECK_THROWS_AS(load_multiplicity_table("/nonexistent/table.json", rd, levi), Error);

    std::remove(good.c_str());
    std::remove(bad_dom.c_str());
    std::remove(empty.c_str());
    std::remove(mangled.c_str());
}
