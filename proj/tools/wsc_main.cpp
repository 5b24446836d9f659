#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wsc/json_io.hpp"
#include "wsc/kac.hpp"
#include "wsc/kl.hpp"
#include "wsc/pipeline.hpp"

namespace {

using namespace wsc;

std::int64_t default_depth() {
    if (const char* env = std::getenv("WSC_DEPTH")) {
        try {
            long v = std::stol(env);
            if (v >= 0) return v;
        } catch (const std::exception&) {
        }
        raise(ErrorCode::ParseError, "WSC_DEPTH must be a nonnegative integer");
    }
    return 20;
}

struct JobArgs {
    std::string algebra;
    std::string nilpotent;
    std::string levi;
    std::string theta;
    std::string lambda;
    std::string module_kind = "w";
    std::string table_path;
    std::int64_t depth = -1;
    std::int64_t orbit_size = -1;
    bool lagrangian_swap = false;
    bool json = false;
};

NilpotentDatum build_datum(const JobArgs& args) {
    RootDatum rd = parse_algebra(args.algebra);
    LeviDatum levi = parse_levi(rd, args.levi);
    CoordVector theta;
    if (!args.theta.empty()) theta = parse_coords(args.theta, levi.center_basis.size());
    PartitionPair partition = parse_partition_pair(args.nilpotent);
    return NilpotentDatum(std::move(rd), std::move(partition), std::move(levi), theta);
}

int cmd_orbit(const JobArgs& args) {
    NilpotentDatum nd = build_datum(args);
    nlohmann::json report = orbit_report_json(nd);
    if (args.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "algebra      " << report["algebra"].get<std::string>() << "\n";
        std::cout << "nilpotent    " << report["nilpotent"].get<std::string>() << "\n";
        std::cout << "grading (degree: even/odd dims)\n";
        for (const auto& g : report["grading"])
            std::cout << "  " << g["degree"].get<int>() << ": " << g["even"].get<int>() << "/"
                      << g["odd"].get<int>() << "\n";
        std::cout << "centralizer (degree: even/odd dims)\n";
        for (const auto& g : report["centralizer"])
            std::cout << "  " << g["degree"].get<int>() << ": " << g["even"].get<int>() << "/"
                      << g["odd"].get<int>() << "\n";
        std::cout << "dim V = " << report["dim_v_even"].get<int>() << "|"
                  << report["dim_v_odd"].get<int>() << ", dim u1 = " << report["dim_u1"].get<int>()
                  << ", dimension factor = " << report["dimension_factor"].get<std::int64_t>()
                  << "\n";
        std::cout << "component group: " << report["component_group"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_char(const JobArgs& args) {
    NilpotentDatum nd = build_datum(args);
    const RootDatum& rd = nd.root();
    Weight lambda = parse_weight(args.lambda, rd.m, rd.n);

    ModuleKind kind;
    if (args.module_kind == "wtilde") kind = ModuleKind::WTilde;
    else if (args.module_kind == "w") kind = ModuleKind::W;
    else if (args.module_kind == "w0-reference") kind = ModuleKind::W0Reference;
    else raise(ErrorCode::ParseError, "module kind must be wtilde, w or w0-reference");

    std::optional<MultiplicityTable> table;
    if (!args.table_path.empty())
        table = load_multiplicity_table(args.table_path, rd, nd.levi());
    std::optional<std::int64_t> orbit;
    if (args.orbit_size >= 0) orbit = args.orbit_size;
    std::int64_t depth = args.depth >= 0 ? args.depth : default_depth();

    CharacterRun run = run_character_pipeline(nd, lambda, std::move(table), depth, kind, orbit,
                                              args.lagrangian_swap);
    if (args.json) {
        std::cout << character_run_json(nd, lambda, run).dump(2) << "\n";
    } else {
        std::cout << "orbit-sum character      " << character_plaintext(run.soergel_sum) << "\n";
        std::cout << "simple module character  " << character_plaintext(run.wtilde_simple)
                  << "\n";
        if (run.w_simple)
            std::cout << "after Clifford division  " << character_plaintext(*run.w_simple)
                      << "\n";
    }
    return 0;
}

int cmd_verify(std::size_t max_rank, std::size_t truncation, bool serial) {
    auto results = serial ? run_structure_battery_serial(max_rank, truncation)
                          : run_structure_battery(max_rank, truncation);
    nlohmann::json report = verify_report_json(results, truncation);
    std::cout << report.dump(2) << "\n";
    return report["all_pass"].get<bool>() ? 0 : 1;
}

int cmd_kl(const std::string& group, const std::string& x_str, const std::string& w_str,
           bool all, bool json) {
    std::string levi_text = group;
    if (levi_text.find('|') == std::string::npos) levi_text += "|";
    std::size_t m = 0, n = 0;
    {
        // ranks from the block sizes
        LeviDatum probe;
        std::string left = levi_text.substr(0, levi_text.find('|'));
        std::string right = levi_text.substr(levi_text.find('|') + 1);
        auto total = [](const std::string& text) {
            std::size_t sum = 0, pos = 0;
            while (pos < text.size()) {
                auto next = text.find('+', pos);
                if (next == std::string::npos) next = text.size();
                sum += static_cast<std::size_t>(std::stol(text.substr(pos, next - pos)));
                pos = next + 1;
            }
            return sum;
        };
        try {
            m = total(left);
            n = total(right);
        } catch (const std::exception&) {
            raise(ErrorCode::ParseError, "bad group '" + group + "'");
        }
    }
    RootDatum rd = build_root_datum(Family::GL, m, n);
    LeviDatum levi = parse_levi(rd, levi_text);
    WeylGroup W(rd, levi);
    KLContext kl(W);

    nlohmann::json out;
    out["schema"] = 1;
    out["group"] = group;
    if (all) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::size_t w = 0; w < W.size(); ++w)
            for (std::size_t x = 0; x < W.size(); ++x) {
                if (!W.bruhat_leq(x, w)) continue;
                arr.push_back({{"x", W.format_one_line(x)},
                               {"w", W.format_one_line(w)},
                               {"polynomial", kl.polynomial(x, w)}});
            }
        out["table"] = arr;
    } else {
        std::size_t x = W.parse_one_line(x_str);
        std::size_t w = W.parse_one_line(w_str);
        out["x"] = W.format_one_line(x);
        out["w"] = W.format_one_line(w);
        out["polynomial"] = kl.polynomial(x, w);
    }
    if (json) {
        std::cout << out.dump(2) << "\n";
    } else if (all) {
        for (const auto& rec : out["table"]) {
            std::cout << "P[" << rec["x"].get<std::string>() << " ; "
                      << rec["w"].get<std::string>() << "] =";
            for (auto c : rec["polynomial"]) std::cout << " " << c.get<std::int64_t>();
            std::cout << "\n";
        }
    } else {
        std::cout << "P =";
        for (auto c : out["polynomial"]) std::cout << " " << c.get<std::int64_t>();
        std::cout << "\n";
    }
    return 0;
}

int cmd_kac_char(const JobArgs& args, bool even_only) {
    RootDatum rd = parse_algebra(args.algebra);
    LeviDatum levi = parse_levi(rd, args.levi);
    Weight lambda = parse_weight(args.lambda, rd.m, rd.n);
    MultiplicityTable table = compute_multiplicity_table(rd, levi, lambda, !even_only);
    std::cout << multiplicity_table_to_json(table, rd) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characters for finite W-superalgebras of basic type I"};
    app.require_subcommand(1);

    JobArgs args;

    CLI::App* orbit = app.add_subcommand("orbit", "grading, centralizer and Lagrangian data");
    orbit->add_option("--algebra", args.algebra)->required();
    orbit->add_option("--nilpotent", args.nilpotent)->required();
    orbit->add_option("--levi", args.levi);
    orbit->add_option("--theta", args.theta);
    orbit->add_flag("--json", args.json);

    CLI::App* chr = app.add_subcommand("char", "character of a simple supermodule");
    chr->add_option("--algebra", args.algebra)->required();
    chr->add_option("--nilpotent", args.nilpotent)->required();
    chr->add_option("--lambda", args.lambda)->required();
    chr->add_option("--levi", args.levi);
    chr->add_option("--theta", args.theta);
    chr->add_option("--depth", args.depth);
    chr->add_option("--module", args.module_kind)->check(CLI::IsMember({"wtilde", "w", "w0-reference"}));
    chr->add_option("--orbit-size", args.orbit_size);
    chr->add_option("--table", args.table_path);
    chr->add_flag("--lagrangian-swap", args.lagrangian_swap);
    chr->add_flag("--json", args.json);

    std::size_t verify_rank = 4, verify_trunc = 16;
    bool verify_serial = false;
    CLI::App* verify = app.add_subcommand("verify", "structure identity battery");
    verify->add_option("--max-rank", verify_rank);
    verify->add_option("--truncation", verify_trunc);
    verify->add_flag("--serial", verify_serial);

    std::string kl_group, kl_x, kl_w;
    bool kl_all = false;
    CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
    kl->add_option("--group", kl_group)->required();
    kl->add_option("--x", kl_x);
    kl->add_option("--w", kl_w);
    kl->add_flag("--all", kl_all);
    kl->add_flag("--json", args.json);

    bool kac_even_only = false;
    CLI::App* kac = app.add_subcommand("kac-char", "parabolic Verma multiplicity table");
    kac->add_option("--algebra", args.algebra)->required();
    kac->add_option("--lambda", args.lambda)->required();
    kac->add_option("--levi", args.levi);
    kac->add_flag("--even-only", kac_even_only);

    CLI11_PARSE(app, argc, argv);

    try {
        if (orbit->parsed()) return cmd_orbit(args);
        if (chr->parsed()) return cmd_char(args);
        if (verify->parsed()) return cmd_verify(verify_rank, verify_trunc, verify_serial);
        if (kl->parsed()) {
            if (!kl_all && (kl_x.empty() || kl_w.empty()))
                raise(ErrorCode::ParseError, "kl needs --x and --w, or --all");
            return cmd_kl(kl_group, kl_x, kl_w, kl_all, args.json);
        }
        if (kac->parsed()) return cmd_kac_char(args, kac_even_only);
    } catch (const wsc::Error& err) {
        std::cout << wsc::error_json(err) << "\n";
        return err.exit_code();
    } catch (const std::exception& exc) {
        wsc::Error err(wsc::ErrorCode::Generic, exc.what());
        std::cout << wsc::error_json(err) << "\n";
        return err.exit_code();
    }
    return 0;
}
