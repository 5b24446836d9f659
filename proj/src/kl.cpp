#include "wsc/kl.hpp"

namespace wsc {

namespace {
void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
} // namespace

Poly poly_zero() { return {}; }
Poly poly_one() { return {1}; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

Poly poly_shift(const Poly& a, std::size_t degree) {
    if (a.empty()) return {};
    Poly out(a.size() + degree, 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i + degree] = a[i];
    return out;
}

std::int64_t poly_eval_one(const Poly& a) {
    std::int64_t s = 0;
    for (auto c : a) s += c;
    return s;
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

const Poly& KLContext::polynomial(std::size_t x, std::size_t w) {
    if (!W_.bruhat_leq(x, w))
        raise(ErrorCode::NotComparable, "x is not below w in Bruhat order");
    return compute(x, w);
}

std::int64_t KLContext::mu(std::size_t z, std::size_t v) {
    if (z == v || !W_.bruhat_leq(z, v)) return 0;
    std::size_t gap = W_.length(v) - W_.length(z);
    if (gap % 2 == 0) return 0;
    const Poly& p = compute(z, v);
    std::size_t want = (gap - 1) / 2;
    return want < p.size() ? p[want] : 0;
}

const Poly& KLContext::compute(std::size_t x, std::size_t w) {
    auto key = std::make_pair(x, w);
    auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    Poly result;
    if (x == w) {
        result = poly_one();
    } else if (!W_.bruhat_leq(x, w)) {
        result = poly_zero();
    } else {
        bool left = strategy_ == Strategy::LeftDescent;
        std::size_t s = W_.simples().size();
        for (std::size_t i = 0; i < W_.simples().size(); ++i) {
            bool descent = left ? W_.is_left_descent(i, w) : W_.is_right_descent(i, w);
            if (descent) {
                s = i;
                break;
            }
        }
        // w != identity, so a descent exists
        std::size_t s_el = W_.simples()[s];
        auto apply = [&](std::size_t g) {
            return left ? W_.multiply(s_el, g) : W_.multiply(g, s_el);
        };
        std::size_t sx = apply(x);
        if (W_.length(sx) > W_.length(x)) {
            // P_{x,w} = P_{sx,w} when s is a descent of w but not of x
            result = compute(sx, w);
        } else {
            std::size_t v = apply(w);  // l(v) = l(w) - 1
            Poly acc = poly_add(compute(sx, v), poly_shift(compute(x, v), 1));
            for (std::size_t z = 0; z < W_.size(); ++z) {
                bool z_descent = left ? W_.is_left_descent(s, z) : W_.is_right_descent(s, z);
                if (!z_descent) continue;
                if (!W_.bruhat_leq(x, z) || !W_.bruhat_leq(z, v)) continue;
                std::int64_t m = mu(z, v);
                if (m == 0) continue;
                std::size_t shift = (W_.length(w) - W_.length(z)) / 2;
                Poly term = poly_shift(compute(x, z), shift);
                for (auto& c : term) c *= m;
                acc = poly_sub(acc, term);
            }
            result = std::move(acc);
        }
    }
    auto [it, inserted] = cache_.emplace(key, std::move(result));
    return it->second;
}

} // namespace wsc
