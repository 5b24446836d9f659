#include "wsc/character.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wsc {

TruncationSpec TruncationSpec::window(CoordVector direction, std::int64_t depth,
                                      TorusWeight reference) {
    TruncationSpec spec;
    spec.active = true;
    spec.direction = std::move(direction);
    spec.depth = depth;
    spec.reference = std::move(reference);
    spec.min_pairing = dot(spec.reference, spec.direction) - rat(depth);
    return spec;
}

FormalCharacter FormalCharacter::monomial(TorusWeight w, std::int64_t c, TruncationSpec spec) {
    FormalCharacter out{{}, std::move(spec)};
    if (c != 0 && out.trunc.keeps(w)) out.terms.emplace(std::move(w), c);
    return out;
}

void FormalCharacter::prune() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
}

std::int64_t FormalCharacter::evaluate_at_one() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : terms) s += c;
    return s;
}

namespace {

void check_compatible(const FormalCharacter& a, const FormalCharacter& b) {
    if (!a.trunc.compatible(b.trunc))
        raise(ErrorCode::Generic, "characters with different truncation windows");
}

} // namespace

FormalCharacter char_add(const FormalCharacter& a, const FormalCharacter& b) {
    check_compatible(a, b);
    FormalCharacter out = a;
    for (const auto& [w, c] : b.terms) out.terms[w] += c;
    out.prune();
    return out;
}

FormalCharacter char_scale(const FormalCharacter& a, std::int64_t c) {
    FormalCharacter out = a;
    if (c == 0) {
        out.terms.clear();
        return out;
    }
    for (auto& [w, coeff] : out.terms) coeff *= c;
    return out;
}

FormalCharacter char_shift(const FormalCharacter& a, const TorusWeight& shift) {
    FormalCharacter out = FormalCharacter::zero(a.trunc);
    for (const auto& [w, c] : a.terms) {
        TorusWeight moved = w + shift;
        if (out.trunc.keeps(moved)) out.terms[std::move(moved)] = c;
    }
    return out;
}

FormalCharacter char_mul_serial(const FormalCharacter& a, const FormalCharacter& b) {
    check_compatible(a, b);
    FormalCharacter out = FormalCharacter::zero(a.trunc);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms) {
            TorusWeight w = wa + wb;
            if (!out.trunc.keeps(w)) continue;
            out.terms[std::move(w)] += ca * cb;
        }
    out.prune();
    return out;
}

FormalCharacter char_mul_parallel(const FormalCharacter& a, const FormalCharacter& b) {
    check_compatible(a, b);
    std::vector<const std::pair<const TorusWeight, std::int64_t>*> left;
    left.reserve(a.terms.size());
    for (const auto& term : a.terms) left.push_back(&term);

    FormalCharacter out = FormalCharacter::zero(a.trunc);
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    // contiguous chunks of the sorted left factor keep each thread's local
    // accumulator in a narrow key band
    std::vector<std::map<TorusWeight, std::int64_t>> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
    {
#ifdef _OPENMP
        std::size_t tid = static_cast<std::size_t>(omp_get_thread_num());
#else
        std::size_t tid = 0;
#endif
        auto& local = partial[tid];
        std::size_t n = left.size();
        std::size_t lo = n * tid / static_cast<std::size_t>(threads);
        std::size_t hi = n * (tid + 1) / static_cast<std::size_t>(threads);
        for (std::size_t i = lo; i < hi; ++i) {
            const auto& [wa, ca] = *left[i];
            for (const auto& [wb, cb] : b.terms) {
                TorusWeight w = wa + wb;
                if (!out.trunc.keeps(w)) continue;
                local[std::move(w)] += ca * cb;
            }
        }
    }
    // integer sums commute, so the merge order cannot change the result;
    // node splicing keeps the merge allocation-free for disjoint key bands
    out.terms = std::move(partial[0]);
    for (std::size_t t = 1; t < partial.size(); ++t) {
        out.terms.merge(partial[t]);
        for (const auto& [w, c] : partial[t]) out.terms[w] += c;
    }
    out.prune();
    return out;
}

FormalCharacter char_mul(const FormalCharacter& a, const FormalCharacter& b) {
    // below this many term pairs the threading overhead dominates
    if (a.terms.size() * b.terms.size() < (std::size_t{1} << 14))
        return char_mul_serial(a, b);
    return char_mul_parallel(a, b);
}

FormalCharacter char_geom_inverse(const TorusWeight& mu, int sign, const TruncationSpec& spec) {
    if (!spec.active || !(dot(mu, spec.direction) < 0))
        raise(ErrorCode::DivergentDirection,
              "geometric expansion needs a strictly negative pairing with the direction");
    FormalCharacter out = FormalCharacter::zero(spec);
    TorusWeight w(mu.size());
    std::int64_t coeff = 1;
    while (spec.keeps(w)) {
        out.terms[w] = coeff;
        w += mu;
        if (sign > 0) coeff = -coeff;
    }
    return out;
}

FormalCharacter char_mul_geom_inverse(const FormalCharacter& a, const TorusWeight& mu,
                                      int sign) {
    if (!a.trunc.active || !(dot(mu, a.trunc.direction) < 0))
        raise(ErrorCode::DivergentDirection,
              "geometric expansion needs a strictly negative pairing with the direction");
    FormalCharacter out = FormalCharacter::zero(a.trunc);
    for (const auto& [wa, ca] : a.terms) {
        TorusWeight w = wa;
        std::int64_t coeff = ca;
        while (out.trunc.keeps(w)) {
            out.terms[w] += coeff;
            w += mu;
            if (sign > 0) coeff = -coeff;
        }
    }
    out.prune();
    return out;
}

namespace {

Rational rational_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return Rational(q);
}

// Exact division of a Laurent polynomial by (1 + e^mu), coset by coset
// along the line Z*mu.
FormalCharacter divide_one_plus_exact(const FormalCharacter& a, const TorusWeight& mu) {
    std::size_t lead = 0;
    while (lead < mu.size() && mu[lead] == 0) ++lead;
    if (lead == mu.size()) {
        // mu = 0: divisor is the scalar 2
        FormalCharacter out = a;
        for (auto& [w, c] : out.terms) {
            if (c % 2 != 0)
                raise(ErrorCode::InexactDivision, "coefficient not divisible by 1 + e^0 = 2");
            c /= 2;
        }
        return out;
    }

    // coset representative: subtract floor(<w>_lead / mu_lead) * mu
    std::map<TorusWeight, std::map<std::int64_t, std::int64_t>> cosets;
    for (const auto& [w, c] : a.terms) {
        Rational t = w[lead] / mu[lead];
        Rational k = rational_floor(t);
        TorusWeight base = w - k * mu;
        cosets[base][to_int64(k)] = c;
    }

    FormalCharacter out = FormalCharacter::zero(a.trunc);
    for (const auto& [base, line] : cosets) {
        std::int64_t lo = line.begin()->first;
        std::int64_t hi = line.rbegin()->first;
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(hi - lo + 1), 0);
        for (const auto& [k, c] : line) coeffs[static_cast<std::size_t>(k - lo)] = c;
        // synthetic division by (1 + x) from the top
        std::vector<std::int64_t> quotient(coeffs.size(), 0);
        std::int64_t carry = 0;
        for (std::size_t i = coeffs.size(); i-- > 1;) {
            carry = coeffs[i] - carry;
            quotient[i - 1] = carry;
        }
        if (coeffs[0] != carry)
            raise(ErrorCode::InexactDivision,
                  "character is not divisible by the Clifford factor");
        for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
            if (quotient[i] == 0) continue;
            out.terms[base + Rational(static_cast<long>(lo) + static_cast<long>(i)) * mu] +=
                quotient[i];
        }
    }
    out.prune();
    return out;
}

} // namespace

FormalCharacter char_divide_one_plus(const FormalCharacter& a, const TorusWeight& mu) {
    if (!a.trunc.active) return divide_one_plus_exact(a, mu);

    Rational pairing = dot(mu, a.trunc.direction);
    if (pairing < 0) return char_mul_geom_inverse(a, mu, +1);
    if (pairing > 0) {
        // (1 + e^mu)^{-1} = sum_{k >= 1} (-1)^{k-1} e^{-k mu}
        FormalCharacter out = FormalCharacter::zero(a.trunc);
        for (const auto& [wa, ca] : a.terms) {
            TorusWeight w = wa - mu;
            std::int64_t coeff = ca;
            while (out.trunc.keeps(w)) {
                out.terms[w] += coeff;
                w -= mu;
                coeff = -coeff;
            }
        }
        out.prune();
        return out;
    }
    if (!mu.is_zero())
        raise(ErrorCode::DivergentDirection,
              "Clifford weight pairs to zero with the truncation direction");
    return divide_one_plus_exact(a, mu);
}

} // namespace wsc
