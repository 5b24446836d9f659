#include "wsc/kac.hpp"

#include <fstream>

#include <json.hpp>

namespace wsc {

bool is_typical(const RootDatum& rd, const Weight& lambda) {
    Weight shifted = lambda + rd.rho;
    for (const auto& beta : rd.odd_positive_roots)
        if (rd.super_form(shifted, beta) == 0) return false;
    return true;
}

VermaCombination kac_character_verma_expansion(const RootDatum& rd, const WeylGroup& W_even,
                                               KLContext& kl, const Weight& lambda,
                                               bool include_odd) {
    if (!lambda.is_integral())
        raise(ErrorCode::NotIntegral, "highest weight must be integral");
    if (!is_typical(rd, lambda))
        raise(ErrorCode::AtypicalWeight,
              "weight is atypical; supply a multiplicity table for it");

    AntidominantResult anti = to_antidominant(rd, W_even, lambda);
    if (anti.singular)
        raise(ErrorCode::SingularWeight,
              "weight is singular for the even dot action; not handled");

    // even part: ch L0(lambda) = sum_x (-1)^{l(w)-l(x)} P_{x,w}(1) ch M(x . lambda0)
    VermaCombination even_terms;
    std::size_t w = anti.w;
    for (std::size_t x = 0; x < W_even.size(); ++x) {
        if (!W_even.bruhat_leq(x, w)) continue;
        std::int64_t mult = poly_eval_one(kl.polynomial(x, w));
        if (mult == 0) continue;
        std::int64_t sign = (W_even.length(w) - W_even.length(x)) % 2 == 0 ? 1 : -1;
        even_terms[dot_action(rd, W_even, x, anti.lambda0)] += sign * mult;
    }

    if (!include_odd) {
        for (auto it = even_terms.begin(); it != even_terms.end();)
            it = it->second == 0 ? even_terms.erase(it) : std::next(it);
        return even_terms;
    }

    // odd part: distribute prod_{beta in odd positive} (1 + e^{-beta});
    // the even Weyl denominator is untouched, so each subset S shifts every
    // Verma weight by -sum(S).
    std::size_t k = rd.odd_positive_roots.size();
    if (k > 20)
        raise(ErrorCode::GroupTooLarge, "too many odd positive roots for subset expansion");
    VermaCombination out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Weight sigma(rd.rank());
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::size_t{1} << b)) sigma += rd.odd_positive_roots[b];
        for (const auto& [nu, c] : even_terms) {
            if (c == 0) continue;
            out[nu - sigma] += c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

MultiplicityTable to_parabolic_verma_basis(const RootDatum& rd, const WeylGroup& W_levi,
                                           const VermaCombination& vc, const Weight& lambda) {
    std::map<Weight, std::int64_t> sums;
    for (const auto& [nu, c] : vc) {
        if (c == 0) continue;
        LeviDominantResult rep = to_levi_dominant(rd, W_levi, nu);
        if (rep.singular) continue;  // no parabolic Verma on a Levi wall
        sums[rep.mu] += W_levi.sign(rep.u) * c;
    }
    std::int64_t order = static_cast<std::int64_t>(W_levi.size());
    MultiplicityTable table;
    table.lambda = lambda;
    table.source = "computed-typical";
    for (auto it = sums.rbegin(); it != sums.rend(); ++it) {
        if (it->second == 0) continue;
        if (it->second % order != 0)
            raise(ErrorCode::Generic,
                  "combination is not in the span of parabolic Verma characters");
        table.entries.push_back({it->first, it->second / order});
    }
    if (table.entries.empty())
        raise(ErrorCode::Generic, "empty parabolic Verma expansion");
    return table;
}

VermaCombination expand_parabolic_vermas(const RootDatum& rd, const WeylGroup& W_levi,
                                         const MultiplicityTable& table) {
    VermaCombination out;
    for (const auto& [mu, c] : table.entries)
        for (std::size_t u = 0; u < W_levi.size(); ++u)
            out[dot_action(rd, W_levi, u, mu)] += W_levi.sign(u) * c;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

MultiplicityTable compute_multiplicity_table(const RootDatum& rd, const LeviDatum& levi,
                                             const Weight& lambda, bool include_odd) {
    if (!is_levi_dominant(rd, levi, lambda))
        raise(ErrorCode::NotDominant, "highest weight is not Levi-dominant");
    WeylGroup W_even(rd, full_levi(rd));
    WeylGroup W_levi(rd, levi);
    KLContext kl(W_even);
    VermaCombination vc = kac_character_verma_expansion(rd, W_even, kl, lambda, include_odd);
    return to_parabolic_verma_basis(rd, W_levi, vc, lambda);
}

MultiplicityTable load_multiplicity_table(const std::string& path, const RootDatum& rd,
                                          const LeviDatum& levi) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::ParseError, "cannot open table file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& exc) {
        raise(ErrorCode::ParseError, std::string("bad table JSON: ") + exc.what());
    }
    MultiplicityTable table;
    try {
        table.lambda = parse_weight(doc.at("lambda").get<std::string>(), rd.m, rd.n);
        table.source = doc.value("source", std::string("user-supplied"));
        for (const auto& entry : doc.at("entries")) {
            Weight w = parse_weight(entry.at("weight").get<std::string>(), rd.m, rd.n);
            std::int64_t c = entry.at("coeff").get<std::int64_t>();
            table.entries.push_back({std::move(w), c});
        }
    } catch (const Error&) {
        throw;
    } catch (const std::exception& exc) {
        raise(ErrorCode::ParseError, std::string("bad table JSON: ") + exc.what());
    }
    if (table.entries.empty())
        raise(ErrorCode::ParseError, "multiplicity table has no entries");
    for (const auto& [w, c] : table.entries) {
        if (!w.is_integral() || !is_levi_dominant(rd, levi, w))
            raise(ErrorCode::NotDominant,
                  "table weight '" + format_weight(w, rd.m) + "' is not Levi-dominant integral");
    }
    return table;
}

std::string multiplicity_table_to_json(const MultiplicityTable& table, const RootDatum& rd) {
    nlohmann::json doc;
    doc["schema"] = 1;
    doc["lambda"] = format_weight(table.lambda, rd.m);
    doc["source"] = table.source;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [w, c] : table.entries)
        entries.push_back({{"weight", format_weight(w, rd.m)}, {"coeff", c}});
    doc["entries"] = entries;
    return doc.dump(2);
}

} // namespace wsc
