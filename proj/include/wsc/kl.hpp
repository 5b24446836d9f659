#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wsc/weyl.hpp"

namespace wsc {

/// Polynomial in q with integer coefficients, low degree first, no trailing
/// zeros.
using Poly = std::vector<std::int64_t>;

Poly poly_zero();
Poly poly_one();
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_shift(const Poly& a, std::size_t degree);  // multiply by q^degree
std::int64_t poly_eval_one(const Poly& a);
int poly_degree(const Poly& a);  // -1 for zero

/// Kazhdan-Lusztig polynomials via the classical recursion, memoized per
/// group. The descent used at each step is configurable so that the
/// tie-breaking invariance can be tested; both strategies must agree.
class KLContext {
public:
    enum class Strategy { LeftDescent, RightDescent };

    explicit KLContext(const WeylGroup& W, Strategy strategy = Strategy::LeftDescent)
        : W_(W), strategy_(strategy) {}

    /// P_{x,w}; raises NotComparable unless x <= w in Bruhat order.
    const Poly& polynomial(std::size_t x, std::size_t w);

    /// mu(z, v): the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.
    std::int64_t mu(std::size_t z, std::size_t v);

    const WeylGroup& group() const { return W_; }

private:
    const Poly& compute(std::size_t x, std::size_t w);

    const WeylGroup& W_;
    Strategy strategy_;
    std::map<std::pair<std::size_t, std::size_t>, Poly> cache_;
};

} // namespace wsc
