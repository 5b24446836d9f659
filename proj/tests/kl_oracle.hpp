#pragma once

// Test-only oracle for Kazhdan-Lusztig polynomials: computes R-polynomials
// by their own recursion and then inverts
//     sum_{x <= z <= w} R_{x,z} P_{z,w} = q^{l(w)-l(x)} P_{x,w}(1/q)
// by downward induction on l(x). Independent of the production recursion.

#include <algorithm>
#include <map>

#include "wsc/kl.hpp"

namespace wsc_test {

struct ROracle {
    const wsc::WeylGroup& W;
    std::map<std::pair<std::size_t, std::size_t>, wsc::Poly> cache;

    explicit ROracle(const wsc::WeylGroup& w) : W(w) {}

    const wsc::Poly& r_poly(std::size_t x, std::size_t w) {
        using namespace wsc;
        auto key = std::make_pair(x, w);
        auto hit = cache.find(key);
        if (hit != cache.end()) return hit->second;
        Poly result;
        if (x == w) {
            result = poly_one();
        } else if (!W.bruhat_leq(x, w)) {
            result = poly_zero();
        } else {
            std::size_t s = 0;
            while (!W.is_left_descent(s, w)) ++s;
            std::size_t s_el = W.simples()[s];
            std::size_t sw = W.multiply(s_el, w);
            std::size_t sx = W.multiply(s_el, x);
            if (W.length(sx) < W.length(x)) {
                result = r_poly(sx, sw);
            } else {
                // (q-1) R_{x,sw} + q R_{sx,sw}
                Poly a = r_poly(x, sw);
                Poly b = r_poly(sx, sw);
                result = poly_add(poly_sub(poly_shift(a, 1), a), poly_shift(b, 1));
            }
        }
        return cache.emplace(key, std::move(result)).first->second;
    }
};

inline std::map<std::pair<std::size_t, std::size_t>, wsc::Poly> kl_by_inversion(
    const wsc::WeylGroup& W) {
    using namespace wsc;
    ROracle oracle(W);
    std::map<std::pair<std::size_t, std::size_t>, Poly> table;
    std::vector<std::size_t> by_length(W.size());
    for (std::size_t i = 0; i < W.size(); ++i) by_length[i] = i;
    std::sort(by_length.begin(), by_length.end(),
              [&](std::size_t a, std::size_t b) { return W.length(a) > W.length(b); });
    for (std::size_t w = 0; w < W.size(); ++w) {
        for (std::size_t x : by_length) {
            if (!W.bruhat_leq(x, w)) continue;
            if (x == w) {
                table[{x, w}] = poly_one();
                continue;
            }
            Poly f = poly_zero();
            for (std::size_t z = 0; z < W.size(); ++z) {
                if (z == x) continue;
                if (!W.bruhat_leq(x, z) || !W.bruhat_leq(z, w)) continue;
                f = poly_add(f, poly_mul(oracle.r_poly(x, z), table.at({z, w})));
            }
            // low-degree part of -f, up to (l(w) - l(x) - 1)/2
            std::size_t gap = W.length(w) - W.length(x);
            std::size_t keep = (gap - 1) / 2 + 1;
            Poly p(f.begin(), f.begin() + std::min<std::ptrdiff_t>(
                                              static_cast<std::ptrdiff_t>(f.size()),
                                              static_cast<std::ptrdiff_t>(keep)));
            for (auto& c : p) c = -c;
            while (!p.empty() && p.back() == 0) p.pop_back();
            table[{x, w}] = std::move(p);
        }
    }
    return table;
}

} // namespace wsc_test
