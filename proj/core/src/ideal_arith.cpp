#include "quadfact/ideal_arith.hpp"

#include <stdexcept>

namespace quadfact {

using checked::add;
using checked::mul;
using checked::sub;

void require_minus_five(Int d) {
    if (d != kMinusFive) {
        throw domain_error("operation is only defined for Z[sqrt(-5)], got d = " + to_string(d));
    }
}

InversePair inverse_pair(const QuadIdeal& ideal) {
    require_minus_five(ideal.d());
    // The basis (a, b + c sqrt(-5)) has content gcd(a, b, c) = c.
    const Int content = ideal.c();
    const Int a1 = ideal.a() / content;
    const Int b1 = 0;
    const Int a2 = ideal.b() / content;
    const Int b2 = 1;
    const Int n_alpha = add(mul(a1, a1), mul(5, mul(b1, b1)));
    const Int cross = add(mul(2, mul(a1, a2)), mul(10, mul(b1, b2)));
    const Int n_beta = add(mul(a2, a2), mul(5, mul(b2, b2)));
    const Int reduced = gcd(gcd(n_alpha, cross), n_beta);
    return {conjugate(ideal), mul(reduced, mul(content, content))};
}

std::optional<QuadIdeal> divide(const QuadIdeal& dividend, const QuadIdeal& divisor) {
    require_minus_five(dividend.d());
    require_same_ring(dividend.d(), divisor.d());
    if (!contains(divisor, dividend)) return std::nullopt;
    const InversePair inv = inverse_pair(divisor);
    const QuadIdeal scaled = dividend * inv.partner;
    const Int f = inv.scale;
    if (scaled.a() % f != 0 || scaled.b() % f != 0 || scaled.c() % f != 0) {
        throw std::logic_error("ideal quotient is not integral despite containment");
    }
    return QuadIdeal::from_hnf(dividend.d(), scaled.a() / f, scaled.b() / f, scaled.c() / f);
}

std::optional<QuadInt> principal_generator(const QuadIdeal& ideal) {
    require_minus_five(ideal.d());
    const Int n = norm(ideal);
    const Int y_max = isqrt(n / 5);
    for (Int y = 0; y <= y_max; ++y) {
        const Int rest = sub(n, mul(5, mul(y, y)));
        if (!is_perfect_square(rest)) continue;
        const Int x = isqrt(rest);
        for (Int sign : {Int{1}, Int{-1}}) {
            if (y == 0 && sign < 0) continue;
            QuadInt gamma(x, sign * y, ideal.d());
            if (contains(ideal, gamma) && principal_ideal(gamma) == ideal) {
                return canonical_associate(gamma);
            }
        }
    }
    return std::nullopt;
}

IdealClass ideal_class(const QuadIdeal& ideal) {
    return principal_generator(ideal) ? IdealClass::Principal : IdealClass::NonPrincipal;
}

IdealClass operator*(IdealClass lhs, IdealClass rhs) {
    return lhs == rhs ? IdealClass::Principal : IdealClass::NonPrincipal;
}

std::string_view to_string(IdealClass cls) {
    return cls == IdealClass::Principal ? "Principal" : "NonPrincipal";
}

}  // namespace quadfact
