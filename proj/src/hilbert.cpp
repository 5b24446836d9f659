#include "wsc/hilbert.hpp"

#include <algorithm>

namespace wsc {

void GradedSeries::mul_exterior(int d) {
    if (d == 0)
        raise(ErrorCode::Generic, "degree-0 exterior factor must be folded in as a scalar");
    if (d > 0) {
        for (std::size_t k = coeffs.size(); k-- > static_cast<std::size_t>(d);)
            coeffs[k] += coeffs[k - static_cast<std::size_t>(d)];
        return;
    }
    // d <= 0: extend the window downward by |d|
    std::size_t shift = static_cast<std::size_t>(-d);
    std::vector<std::int64_t> out(coeffs.size() + shift, 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        out[k + shift] += coeffs[k];
        out[k] += coeffs[k];
    }
    min_degree += d;
    coeffs = std::move(out);
}

void GradedSeries::mul_geometric(int d) {
    if (d < 1) raise(ErrorCode::Generic, "polynomial generator of nonpositive Kazhdan degree");
    for (std::size_t k = static_cast<std::size_t>(d); k < coeffs.size(); ++k)
        coeffs[k] += coeffs[k - static_cast<std::size_t>(d)];
}

void GradedSeries::trim(int upper_bound) {
    if (max_degree() > upper_bound)
        coeffs.resize(static_cast<std::size_t>(upper_bound - min_degree + 1));
    std::size_t lead = 0;
    while (lead + 1 < coeffs.size() && coeffs[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
        min_degree += static_cast<int>(lead);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    GradedSeries out(0);
    out.min_degree = a.min_degree + b.min_degree;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

namespace {

int kazhdan_degree(const HomogeneousVector& v) { return v.h_degree + 2; }

// Exterior factors of negative degree lower the exact range of a product;
// computing with this much extra headroom keeps every degree <= truncation
// exact through all the factorization checks.
int negative_degree_slack(const NilpotentDatum& nd) {
    int slack = 0;
    for (const auto& v : nd.graded_basis())
        if (v.odd && kazhdan_degree(v) < 0) slack -= kazhdan_degree(v);
    return slack;
}

struct ExteriorAccumulator {
    GradedSeries series;
    int zero_degree_count = 0;  // (1 + t^0) factors, folded in as powers of 2

    explicit ExteriorAccumulator(std::size_t cutoff) : series(cutoff) {}
    void push(int degree) {
        if (degree == 0) ++zero_degree_count;
        else series.mul_exterior(degree);
    }
    void finish() {
        for (int k = 0; k < zero_degree_count; ++k)
            for (auto& c : series.coeffs) c *= 2;
    }
};

} // namespace

GradedSeries hilbert_series(const NilpotentDatum& nd, SeriesKind kind, std::size_t truncation) {
    std::size_t cutoff = truncation + static_cast<std::size_t>(negative_degree_slack(nd));
    ExteriorAccumulator acc(cutoff);
    bool poly_gens = kind == SeriesKind::WTilde || kind == SeriesKind::W || kind == SeriesKind::W0;
    if (poly_gens)
        for (const auto& v : nd.centralizer())
            if (!v.odd) acc.series.mul_geometric(kazhdan_degree(v));
    switch (kind) {
        case SeriesKind::WTilde:
            for (const auto& v : nd.graded_basis())
                if (v.odd) acc.push(kazhdan_degree(v));
            break;
        case SeriesKind::W:
            for (const auto& v : nd.centralizer())
                if (v.odd) acc.push(kazhdan_degree(v));
            break;
        case SeriesKind::W0:
            break;
        case SeriesKind::WPlusSharp:
            for (const auto& v : nd.graded_basis())
                if (v.odd && v.z_degree == 1) acc.push(kazhdan_degree(v));
            break;
        case SeriesKind::WMinusSharp:
            for (const auto& v : nd.graded_basis())
                if (v.odd && v.z_degree == -1) acc.push(kazhdan_degree(v));
            break;
        case SeriesKind::CliffordV:
            for (const auto& v : nd.symplectic_space())
                if (v.odd) acc.push(kazhdan_degree(v));
            break;
    }
    acc.finish();
    acc.series.trim(static_cast<int>(truncation));
    return acc.series;
}

namespace {

IdentityReport make_report(const std::string& identity, const GradedSeries& lhs,
                           GradedSeries rhs, int truncation) {
    rhs.trim(truncation);
    IdentityReport report;
    report.identity = identity;
    report.min_degree = std::min(lhs.min_degree, rhs.min_degree);
    auto padded = [&](const GradedSeries& s) {
        std::vector<std::int64_t> out;
        for (int d = report.min_degree; d <= truncation; ++d) out.push_back(s.coeff_at(d));
        return out;
    };
    report.expected = padded(lhs);
    report.actual = padded(rhs);
    report.pass = report.expected == report.actual;
    return report;
}

} // namespace

IdentityReport check_clifford_factorization(const NilpotentDatum& nd, std::size_t truncation) {
    std::size_t cutoff = truncation + static_cast<std::size_t>(negative_degree_slack(nd));
    GradedSeries lhs = hilbert_series(nd, SeriesKind::WTilde, truncation);
    GradedSeries rhs = hilbert_series(nd, SeriesKind::CliffordV, cutoff) *
                       hilbert_series(nd, SeriesKind::W, cutoff);
    return make_report("H(Wtilde) == H(Lambda(V_odd)) * H(W)", lhs, std::move(rhs),
                       static_cast<int>(truncation));
}

IdentityReport check_triangular_factorization(const NilpotentDatum& nd, std::size_t truncation) {
    std::size_t cutoff = truncation + static_cast<std::size_t>(negative_degree_slack(nd));
    GradedSeries lhs = hilbert_series(nd, SeriesKind::WTilde, truncation);
    GradedSeries rhs = hilbert_series(nd, SeriesKind::WPlusSharp, cutoff) *
                       hilbert_series(nd, SeriesKind::W0, cutoff);
    rhs = rhs * hilbert_series(nd, SeriesKind::WMinusSharp, cutoff);
    IdentityReport report = make_report("H(Wtilde) == H(Wplus#) * H(W0) * H(Wminus#)", lhs,
                                        std::move(rhs), static_cast<int>(truncation));

    // odd generator bookkeeping: degrees on g_{+1} and g_{-1} together must
    // reproduce the degrees on all of g_odd
    std::vector<int> wings, all_odd;
    for (const auto& v : nd.graded_basis()) {
        if (!v.odd) continue;
        all_odd.push_back(v.h_degree);
        if (v.z_degree == 1 || v.z_degree == -1) wings.push_back(v.h_degree);
    }
    std::sort(wings.begin(), wings.end());
    std::sort(all_odd.begin(), all_odd.end());
    if (wings != all_odd) {
        report.pass = false;
        report.note = "odd generator multisets of the wings do not exhaust g_odd";
    }
    return report;
}

} // namespace wsc
