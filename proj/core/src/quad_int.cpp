#include "quadfact/quad_int.hpp"

#include <tuple>

namespace quadfact {

using checked::add;
using checked::mul;
using checked::sub;

void require_valid_ring_parameter(Int d) {
    if (d == kMinusFive) return;
    if (d == 0 || d == 1) throw domain_error("ring parameter d must not be 0 or 1");
    Int r = floor_mod(d, 4);
    if (r != 2 && r != 3) {
        throw domain_error("ring parameter d = " + to_string(d) + " is not 2 or 3 mod 4");
    }
    Int m = abs(d);
    for (Int p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) {
            throw domain_error("ring parameter d = " + to_string(d) + " is not squarefree");
        }
    }
}

void require_same_ring(Int d1, Int d2) {
    if (d1 != d2) {
        throw domain_error("mismatched ring parameters d = " + to_string(d1) + " and d = " +
                           to_string(d2));
    }
}

QuadInt::QuadInt(Int a, Int b, Int d) : a_(a), b_(b), d_(d) { require_valid_ring_parameter(d); }

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.d_, y.d_);
    return QuadInt(add(x.a_, y.a_), add(x.b_, y.b_), x.d_, QuadInt::trusted_t{});
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.d_, y.d_);
    return QuadInt(sub(x.a_, y.a_), sub(x.b_, y.b_), x.d_, QuadInt::trusted_t{});
}

QuadInt operator-(const QuadInt& x) {
    return QuadInt(checked::neg(x.a_), checked::neg(x.b_), x.d_, QuadInt::trusted_t{});
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.d_, y.d_);
    Int a = add(mul(x.a_, y.a_), mul(x.d_, mul(x.b_, y.b_)));
    Int b = add(mul(x.a_, y.b_), mul(y.a_, x.b_));
    return QuadInt(a, b, x.d_, QuadInt::trusted_t{});
}

Int norm(const QuadInt& x) { return sub(mul(x.a(), x.a()), mul(x.d(), mul(x.b(), x.b()))); }

QuadInt conjugate(const QuadInt& x) {
    return QuadInt(x.a_, checked::neg(x.b_), x.d_, QuadInt::trusted_t{});
}

Int trace(const QuadInt& x) { return mul(2, x.a()); }

bool is_unit(const QuadInt& x) {
    Int n = norm(x);
    return n == 1 || n == -1;
}

std::optional<QuadInt> divide(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.d_, y.d_);
    if (y.is_zero()) throw domain_error("division by zero element");
    Int n = norm(y);
    QuadInt num = x * conjugate(y);
    if (num.a_ % n != 0 || num.b_ % n != 0) return std::nullopt;
    return QuadInt(num.a_ / n, num.b_ / n, x.d_, QuadInt::trusted_t{});
}

Int discriminant_pair(const QuadInt& x, const QuadInt& y) {
    require_same_ring(x.d(), y.d());
    Int det = sub(mul(x.a(), y.b()), mul(y.a(), x.b()));
    return mul(mul(4, x.d()), mul(det, det));
}

bool is_canonical_associate(const QuadInt& x) {
    return x.a() > 0 || (x.a() == 0 && x.b() > 0);
}

QuadInt canonical_associate(const QuadInt& x) {
    if (x.is_zero() || is_canonical_associate(x)) return x;
    return -x;
}

bool NormOrder::operator()(const QuadInt& x, const QuadInt& y) const {
    return std::make_tuple(norm(x), x.a(), x.b()) < std::make_tuple(norm(y), y.a(), y.b());
}

}  // namespace quadfact
