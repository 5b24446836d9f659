#include "wsc/json_io.hpp"

#include <algorithm>

namespace wsc {

using nlohmann::json;

json conventions_json(const RootDatum& rd) {
    json j;
    j["rho"] = "rho0 - rho1, half-sums over the positive system of the matrix realization";
    j["rho0"] = format_weight(rd.rho0, rd.m);
    j["rho1"] = format_weight(rd.rho1, rd.m);
    j["kazhdan_degree"] = "a vector in g(i) has degree i + 2";
    j["invariant_form"] = "supertrace form str(xy)";
    j["levi_remark"] = NilpotentDatum::levi_caveat();
    return j;
}

json torus_weight_json(const TorusWeight& w) {
    json arr = json::array();
    for (const auto& c : w.coords) arr.push_back(rat_str(c));
    return arr;
}

namespace {

std::vector<std::pair<TorusWeight, std::int64_t>> sorted_terms(const FormalCharacter& fc) {
    std::vector<std::pair<TorusWeight, std::int64_t>> terms(fc.terms.begin(), fc.terms.end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (fc.trunc.active) {
            Rational pa = dot(a.first, fc.trunc.direction);
            Rational pb = dot(b.first, fc.trunc.direction);
            if (pa != pb) return pa > pb;
        }
        return b.first < a.first;
    });
    return terms;
}

} // namespace

json character_json(const FormalCharacter& fc) {
    json arr = json::array();
    for (const auto& [w, c] : sorted_terms(fc))
        arr.push_back({{"weight", torus_weight_json(w)}, {"coeff", c}});
    return arr;
}

json truncation_json(const TruncationSpec& spec) {
    json j;
    j["active"] = spec.active;
    if (spec.active) {
        j["direction"] = torus_weight_json(spec.direction);
        j["depth"] = spec.depth;
        j["reference"] = torus_weight_json(spec.reference);
    }
    return j;
}

json orbit_report_json(const NilpotentDatum& nd) {
    json j;
    j["schema"] = 1;
    j["algebra"] = algebra_name(nd.root());
    j["nilpotent"] = format_partition_pair(nd.partition());
    j["levi"] = format_levi(nd.levi());
    j["theta"] = torus_weight_json(nd.theta_coords());

    json grading = json::array();
    for (const auto& [deg, dims] : nd.grading_dims())
        grading.push_back({{"degree", deg}, {"even", dims.first}, {"odd", dims.second}});
    j["grading"] = grading;

    json cent = json::array();
    for (const auto& [deg, dims] : nd.centralizer_dims())
        cent.push_back({{"degree", deg}, {"even", dims.first}, {"odd", dims.second}});
    j["centralizer"] = cent;

    j["dim_v_even"] = nd.dim_v_even();
    j["dim_v_odd"] = nd.dim_v_odd();
    j["dim_u1"] = nd.u1().size();
    j["dimension_factor"] = nd.module_dimension_factor();

    json denominators = json::array();
    for (const auto& w : nd.denominator_weights()) denominators.push_back(torus_weight_json(w));
    j["denominator_weights"] = denominators;
    json clifford = json::array();
    for (const auto& w : nd.clifford_weights()) clifford.push_back(torus_weight_json(w));
    j["clifford_weights"] = clifford;

    json torus = json::array();
    for (const auto& b : nd.levi().center_basis) torus.push_back(torus_weight_json(b));
    j["torus_basis"] = torus;

    if (nd.orbit_size_known()) {
        j["component_group"] = "trivial";
        j["orbit_size_default"] = 1;
    } else {
        j["component_group"] = "unknown; pass --orbit-size";
    }
    j["conventions"] = conventions_json(nd.root());
    return j;
}

json verify_report_json(const std::vector<OrbitCheckResult>& results, std::size_t truncation) {
    json j;
    j["schema"] = 1;
    j["truncation"] = truncation;
    j["odd_generator_degrees"] =
        "assumption: an odd generator inherits the Kazhdan degree of its g_odd basis vector";
    std::size_t passed = 0, skipped = 0;
    json arr = json::array();
    for (const auto& r : results) {
        json rec;
        rec["algebra"] = r.algebra;
        rec["nilpotent"] = r.partition;
        if (r.skipped_odd_dim) {
            rec["skipped"] = "odd dim g(-1) odd part";
            ++skipped;
        } else if (!r.error.empty()) {
            rec["error"] = r.error;
        } else {
            rec["sl2"] = r.sl2_ok;
            rec["goodness"] = r.goodness_ok;
            rec["multiset_identity"] = r.multiset_ok;
            rec["omega_nondegenerate"] = r.omega_ok;
            json identities = json::array();
            for (const IdentityReport* rep : {&r.clifford, &r.triangular}) {
                json id;
                id["identity"] = rep->identity;
                id["pass"] = rep->pass;
                id["min_degree"] = rep->min_degree;
                id["expected"] = rep->expected;
                id["actual"] = rep->actual;
                if (!rep->note.empty()) id["note"] = rep->note;
                identities.push_back(id);
            }
            rec["identities"] = identities;
        }
        rec["pass"] = r.pass();
        if (r.pass() && !r.skipped_odd_dim) ++passed;
        arr.push_back(rec);
    }
    j["orbits"] = arr;
    j["passed"] = passed;
    j["skipped"] = skipped;
    j["total"] = results.size();
    bool all = true;
    for (const auto& r : results) all = all && r.pass();
    j["all_pass"] = all;
    return j;
}

json character_run_json(const NilpotentDatum& nd, const Weight& lambda,
                        const CharacterRun& run) {
    json j;
    j["schema"] = 1;
    j["algebra"] = algebra_name(nd.root());
    j["nilpotent"] = format_partition_pair(nd.partition());
    j["levi"] = format_levi(nd.levi());
    j["theta"] = torus_weight_json(nd.theta_coords());
    j["lambda"] = format_weight(lambda, nd.root().m);
    j["orbit_size"] = run.orbit_size;
    j["table"] = json::parse(multiplicity_table_to_json(run.table, nd.root()));
    j["truncation"] = truncation_json(run.trunc);
    json torus = json::array();
    for (const auto& b : nd.levi().center_basis) torus.push_back(torus_weight_json(b));
    j["torus_basis"] = torus;
    j["characters"]["soergel_sum"] = character_json(run.soergel_sum);
    j["characters"]["wtilde_simple"] = character_json(run.wtilde_simple);
    if (run.w_simple) j["characters"]["w_simple"] = character_json(*run.w_simple);
    j["conventions"] = conventions_json(nd.root());
    return j;
}

std::string error_json(const Error& err) {
    json j;
    j["error"] = err.name();
    j["message"] = err.what();
    j["exit_code"] = err.exit_code();
    return j.dump(2);
}

std::string character_plaintext(const FormalCharacter& fc) {
    std::string out;
    bool first = true;
    for (const auto& [w, c] : sorted_terms(fc)) {
        if (!first) out += c >= 0 ? " + " : " - ";
        else if (c < 0) out += "-";
        out += std::to_string(c < 0 ? -c : c);
        out += "*e^{";
        out += format_coords(w);
        out += "}";
        first = false;
    }
    if (first) out = "0";
    return out;
}

} // namespace wsc
