#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsc/nilpotent.hpp"

namespace wsc {

/// Truncated series with nonnegative integer coefficients in the Kazhdan
/// grading: a vector of g(i) contributes degree i+2. Even centralizer
/// generators always have degree >= 2 on a good grading, but odd exterior
/// generators from g(i) with i <= -2 contribute nonpositive degrees, so the
/// series is Laurent: finitely many terms below the truncation bound.
struct GradedSeries {
    int min_degree = 0;
    std::vector<std::int64_t> coeffs;  // coeffs[k] is the degree min_degree + k

    explicit GradedSeries(std::size_t truncation = 0)
        : coeffs(truncation + 1, 0) {
        coeffs[0] = 1;
    }

    int max_degree() const { return min_degree + static_cast<int>(coeffs.size()) - 1; }
    std::int64_t coeff_at(int degree) const {
        if (degree < min_degree || degree > max_degree()) return 0;
        return coeffs[static_cast<std::size_t>(degree - min_degree)];
    }

    /// multiply by (1 + t^d); d may be zero or negative for odd generators
    void mul_exterior(int d);
    /// multiply by (1 - t^d)^{-1}, d >= 1
    void mul_geometric(int d);

    /// drop degrees above the bound and zero rows at both ends
    void trim(int upper_bound);

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    friend bool operator==(const GradedSeries& a, const GradedSeries& b) {
        return a.min_degree == b.min_degree && a.coeffs == b.coeffs;
    }
};

enum class SeriesKind {
    WTilde,      // polynomial gens g0bar^e, exterior gens all of g_odd
    W,           // polynomial gens g0bar^e, exterior gens g_odd^e
    W0,          // polynomial gens g0bar^e
    WPlusSharp,  // exterior gens g_{+1}
    WMinusSharp, // exterior gens g_{-1}
    CliffordV,   // exterior gens V_odd
};

/// Kazhdan-graded dimension series of the associated graded algebra of the
/// requested kind, exact on every degree <= truncation.
GradedSeries hilbert_series(const NilpotentDatum& nd, SeriesKind kind, std::size_t truncation);

struct IdentityReport {
    std::string identity;
    bool pass = false;
    int min_degree = 0;
    std::vector<std::int64_t> expected, actual;
    std::string note;
};

/// H(Wtilde) = H(Lambda V_odd) * H(W), coefficientwise up to truncation.
IdentityReport check_clifford_factorization(const NilpotentDatum& nd, std::size_t truncation);

/// H(Wtilde) = H(Wplus#) * H(W0) * H(Wminus#), with the odd generator
/// multiset of the two wings equal to that of g_odd.
IdentityReport check_triangular_factorization(const NilpotentDatum& nd, std::size_t truncation);

} // namespace wsc
