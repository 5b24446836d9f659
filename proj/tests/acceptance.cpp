// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the CLI binary (passed by ctest); the CLI-level
// criteria (stable exit codes, byte-identical reruns) shell out to it.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kl_oracle.hpp"
#include "wsc/battery.hpp"
#include "wsc/json_io.hpp"
#include "wsc/pipeline.hpp"

using namespace wsc;

namespace {

std::string cli_path;
int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult result;
    std::string command = cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ----------------------------------------------------------------------

void criterion_1_structure_battery() {
    auto start = std::chrono::steady_clock::now();
    auto results = run_structure_battery(5, 16);
    double elapsed = seconds_since(start);

    bool pass = !results.empty();
    std::size_t checked = 0;
    for (const auto& r : results) {
        if (r.skipped_odd_dim) continue;  // outside the checked family
        ++checked;
        pass = pass && r.error.empty() && r.sl2_ok && r.goodness_ok && r.multiset_ok &&
               r.omega_ok && r.clifford.pass && r.triangular.pass;
    }
    pass = pass && elapsed < 30.0;
    std::ostringstream detail;
    detail << checked << " gl(m|n) orbits with m+n <= 5, truncation 16, " << elapsed << " s";
    report(1, "structure battery", pass, detail.str());
}

void criterion_2_kl_oracle() {
    auto start = std::chrono::steady_clock::now();
    bool pass = true;
    bool s4_has_one_plus_q = false;
    for (std::size_t rank : {3, 4}) {
        RootDatum rd = build_root_datum(Family::GL, rank, 0);
        WeylGroup W(rd, full_levi(rd));
        KLContext kl(W);
        auto oracle = wsc_test::kl_by_inversion(W);
        for (std::size_t w = 0; w < W.size(); ++w)
            for (std::size_t x = 0; x < W.size(); ++x) {
                if (!W.bruhat_leq(x, w)) continue;
                const Poly& p = kl.polynomial(x, w);
                pass = pass && p == oracle.at({x, w});
                if (rank == 3) pass = pass && p == poly_one();
                if (rank == 4 && p == Poly{1, 1}) s4_has_one_plus_q = true;
            }
    }
    double elapsed = seconds_since(start);
    pass = pass && s4_has_one_plus_q && elapsed < 10.0;
    std::ostringstream detail;
    detail << "recursion == R-polynomial inversion on all Bruhat pairs of S3 and S4, " << elapsed
           << " s";
    report(2, "KL oracle equivalence", pass, detail.str());
}

void criterion_3_distinguished_pipeline() {
    bool pass = true;
    std::string note;
    try {
        RootDatum rd = parse_algebra("gl(2|1)");
        LeviDatum levi = full_levi(rd);
        Weight lambda = parse_weight("5,1|-3", 2, 1);
        std::int64_t dim_l00 = weyl_dimension(rd, levi, lambda);
        NilpotentDatum nd(std::move(rd), parse_partition_pair("2|1"), std::move(levi),
                          CoordVector(2));
        CharacterRun run = run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W,
                                                  std::nullopt, false);

        pass = pass && !run.trunc.active;  // finite Laurent polynomial
        pass = pass && run.soergel_sum.evaluate_at_one() == 4 * dim_l00;  // Kac dimension
        pass = pass && run.w_simple.has_value();
        for (const auto& [w, c] : run.w_simple->terms) pass = pass && c > 0;
        pass = pass &&
               run.wtilde_simple.evaluate_at_one() == 2 * run.w_simple->evaluate_at_one();
        pass = pass && nd.module_dimension_factor() == 2;

        // the division is exact: multiplying back restores the character
        FormalCharacter divisor = char_add(
            FormalCharacter::monomial(TorusWeight(2), 1, TruncationSpec::none()),
            FormalCharacter::monomial(nd.clifford_weights()[0], 1, TruncationSpec::none()));
        pass = pass && char_mul(*run.w_simple, divisor) == run.wtilde_simple;
    } catch (const std::exception& exc) {
        pass = false;
        note = exc.what();
    }
    report(3, "distinguished character pipeline gl(2|1)", pass,
           note.empty() ? "Kac dimension, exact Clifford division, factor 2" : note);
}

void criterion_4_truncation_stability() {
    bool pass = true;
    std::string note;
    try {
        auto build = [] {
            RootDatum rd = parse_algebra("gl(2|2)");
            LeviDatum levi = parse_levi(rd, "2|1+1");
            return NilpotentDatum(std::move(rd), parse_partition_pair("2|1,1"), std::move(levi),
                                  parse_coords("0,1,-1", 3));
        };
        NilpotentDatum nd = build();
        Weight lambda = parse_weight("3,1|-2,-5", 2, 2);
        CharacterRun d20 = run_character_pipeline(nd, lambda, std::nullopt, 20, ModuleKind::W,
                                                  std::nullopt, false);
        CharacterRun d30 = run_character_pipeline(nd, lambda, std::nullopt, 30, ModuleKind::W,
                                                  std::nullopt, false);
        pass = pass && d20.trunc.active && d30.trunc.active;
        auto windows_agree = [&](const FormalCharacter& a, const FormalCharacter& b) {
            for (const auto& [w, c] : a.terms)
                if (!(b.terms.count(w) == 1 && b.terms.at(w) == c)) return false;
            for (const auto& [w, c] : b.terms)
                if (a.trunc.keeps(w) && a.terms.count(w) == 0) return false;
            return true;
        };
        pass = pass && windows_agree(d20.soergel_sum, d30.soergel_sum);
        pass = pass && windows_agree(d20.wtilde_simple, d30.wtilde_simple);
        pass = pass && d20.w_simple && d30.w_simple &&
               windows_agree(*d20.w_simple, *d30.w_simple);
    } catch (const std::exception& exc) {
        pass = false;
        note = exc.what();
    }
    report(4, "truncation stability (depth 20 vs 30)", pass,
           note.empty() ? "gl(2|2), e in the gl(2) block, Levi 2|1+1" : note);
}

void criterion_5_round_trip() {
    bool pass = true;
    std::string note;
    try {
        RootDatum rd = parse_algebra("gl(2|1)");
        LeviDatum levi = full_levi(rd);
        WeylGroup W_even(rd, full_levi(rd));
        WeylGroup W_levi(rd, levi);
        KLContext kl(W_even);

        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> gap(0, 3), base(-5, 5);
        int produced = 0;
        while (produced < 10) {
            Weight lambda(3);
            lambda[0] = base(rng);
            lambda[1] = lambda[0] - gap(rng);
            lambda[2] = base(rng);
            if (!is_typical(rd, lambda)) continue;
            VermaCombination vc;
            try {
                vc = kac_character_verma_expansion(rd, W_even, kl, lambda);
            } catch (const Error&) {
                continue;  // even-singular draw
            }
            ++produced;
            MultiplicityTable table = to_parabolic_verma_basis(rd, W_levi, vc, lambda);
            VermaCombination back = expand_parabolic_vermas(rd, W_levi, table);
            pass = pass && back == vc;
        }
    } catch (const std::exception& exc) {
        pass = false;
        note = exc.what();
    }
    report(5, "regrouping round trip on 10 random typical weights", pass, note);
}

void criterion_6_error_contract() {
    bool pass = true;
    std::ostringstream detail;

    CliResult atypical =
        run_cli("char --algebra \"gl(2|1)\" --nilpotent \"2|1\" --lambda \"3,1|-4\" --json");
    pass = pass && atypical.exit_code == 10 &&
           atypical.output.find("AtypicalWeight") != std::string::npos;

    CliResult division = run_cli(
        "char --algebra \"gl(2|1)\" --nilpotent \"2|1\" --lambda \"5,1|-3\" --orbit-size 2 "
        "--json");
    pass = pass && division.exit_code == 12 &&
           division.output.find("NonIntegralDivision") != std::string::npos;

    // No gl(m|n) or osp(2|2n) Jordan datum has odd-dimensional g(-1)_odd
    // (the h-eigenvalue multisets are symmetric), so the detector is
    // exercised directly and its stable code checked through the mapper.
    bool odd_dim_contract = false;
    try {
        require_even_odd_minus_one(3);
    } catch (const Error& err) {
        odd_dim_contract = err.code() == ErrorCode::OddDimensionalOddPart &&
                           err.exit_code() == 11 &&
                           std::string(err.name()) == "OddDimensionalOddPart";
    }
    pass = pass && odd_dim_contract;

    detail << "AtypicalWeight=10, OddDimensionalOddPart=11 (detector-level; unreachable from "
              "gl/osp Jordan data), NonIntegralDivision=12";
    report(6, "error-path contract", pass, detail.str());
}

void criterion_7_determinism() {
    const std::vector<std::string> jobs = {
        "orbit --algebra \"gl(2|1)\" --nilpotent \"2|1\" --json",
        "char --algebra \"gl(2|1)\" --nilpotent \"2|1\" --lambda \"5,1|-3\" --json",
        "char --algebra \"gl(2|2)\" --nilpotent \"2|1,1\" --levi \"2|1+1\" --theta \"0,1,-1\" "
        "--lambda \"3,1|-2,-5\" --depth 20 --json",
        "char --algebra \"gl(2|1)\" --nilpotent \"2|1\" --lambda \"5,1|-3\" --lagrangian-swap "
        "--json",
        "verify --max-rank 4 --truncation 16",
        "kl --group \"4\" --x \"1,3,2,4\" --w \"3,4,1,2\" --json",
        "kac-char --algebra \"gl(2|1)\" --lambda \"5,1|-3\"",
    };
    bool pass = true;
    for (const auto& job : jobs) {
        CliResult first = run_cli(job);
        CliResult second = run_cli(job);
        bool same = first.exit_code == 0 && second.exit_code == 0 &&
                    first.output == second.output && !first.output.empty();
        if (!same) {
            pass = false;
            std::fprintf(stderr, "  non-deterministic or failing job: %s (exit %d/%d)\n",
                         job.c_str(), first.exit_code, second.exit_code);
        }
    }
    report(7, "byte-identical CLI reruns", pass,
           std::to_string(jobs.size()) + " jobs run twice each");
}

} // namespace

int main(int argc, char** argv) {
    cli_path = argc > 1 ? argv[1] : "./build/tools/wsc";

    criterion_1_structure_battery();
    criterion_2_kl_oracle();
    criterion_3_distinguished_pipeline();
    criterion_4_truncation_stability();
    criterion_5_round_trip();
    criterion_6_error_contract();
    criterion_7_determinism();

    if (failures == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
