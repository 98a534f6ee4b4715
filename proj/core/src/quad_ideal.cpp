#include "quadfact/quad_ideal.hpp"

#include <array>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace quadfact {

using checked::mul;
using checked::sub;

namespace {

struct Row {
    Int x;
    Int y;
};

// Hermite normal form of the lattice spanned by `rows`, as (a, b, c).
// Returns nullopt when every row is zero. The rows must span a rank-2
// lattice otherwise.
std::optional<std::array<Int, 3>> hermite_normal_form(const std::vector<Row>& rows) {
    Int x_gcd = 0;
    std::optional<Row> pivot;
    for (Row row : rows) {
        if (row.y == 0) {
            x_gcd = gcd(x_gcd, row.x);
            continue;
        }
        if (!pivot) {
            pivot = row;
            continue;
        }
        // Euclid on the y column; the row left with y == 0 feeds x_gcd.
        Row p = *pivot;
        while (row.y != 0) {
            Int q = p.y / row.y;
            p.x = sub(p.x, mul(q, row.x));
            p.y = sub(p.y, mul(q, row.y));
            std::swap(p, row);
        }
        pivot = p;
        x_gcd = gcd(x_gcd, row.x);
    }
    if (!pivot) {
        if (x_gcd == 0) return std::nullopt;
        throw std::logic_error("ideal lattice has rank 1");
    }
    if (x_gcd == 0) throw std::logic_error("ideal lattice has rank 1");
    Row p = *pivot;
    if (p.y < 0) {
        p.x = checked::neg(p.x);
        p.y = checked::neg(p.y);
    }
    return std::array<Int, 3>{x_gcd, floor_mod(p.x, x_gcd), p.y};
}

}  // namespace

bool QuadIdeal::is_valid_hnf(Int d, Int a, Int b, Int c) noexcept {
    if (a <= 0 || c <= 0 || b < 0 || b >= a) return false;
    if (a % c != 0 || b % c != 0) return false;
    try {
        Int closure = sub(mul(b, b), mul(d, mul(c, c)));
        return closure % mul(a, c) == 0;
    } catch (const capacity_error&) {
        return false;
    }
}

QuadIdeal QuadIdeal::from_hnf(Int d, Int a, Int b, Int c) {
    require_valid_ring_parameter(d);
    if (!is_valid_hnf(d, a, b, c)) {
        throw domain_error("(" + to_string(a) + ", " + to_string(b) + ", " + to_string(c) +
                           ") is not a canonical ideal basis for d = " + to_string(d));
    }
    return QuadIdeal(d, a, b, c);
}

std::pair<QuadInt, QuadInt> QuadIdeal::basis() const {
    return {QuadInt(a_, 0, d_), QuadInt(b_, c_, d_)};
}

std::optional<QuadIdeal> ideal_from_generators(std::span<const QuadInt> gens) {
    if (gens.empty()) throw domain_error("ideal needs at least one generator");
    const Int d = gens.front().d();
    std::vector<Row> rows;
    rows.reserve(2 * gens.size());
    for (const QuadInt& g : gens) {
        require_same_ring(d, g.d());
        rows.push_back({g.a(), g.b()});
        // sqrt(d) * (a + b sqrt(d)) = d b + a sqrt(d)
        rows.push_back({mul(d, g.b()), g.a()});
    }
    auto hnf = hermite_normal_form(rows);
    if (!hnf) return std::nullopt;
    return QuadIdeal::from_hnf(d, (*hnf)[0], (*hnf)[1], (*hnf)[2]);
}

QuadIdeal principal_ideal(const QuadInt& x) {
    if (x.is_zero()) throw domain_error("the zero ideal is not a QuadIdeal");
    std::array<QuadInt, 1> gens{x};
    return *ideal_from_generators(gens);
}

QuadIdeal unit_ideal(Int d) { return QuadIdeal::from_hnf(d, 1, 0, 1); }

Int norm(const QuadIdeal& ideal) { return mul(ideal.a(), ideal.c()); }

bool contains(const QuadIdeal& ideal, const QuadInt& x) {
    require_same_ring(ideal.d(), x.d());
    if (x.b() % ideal.c() != 0) return false;
    Int k = x.b() / ideal.c();
    return sub(x.a(), mul(k, ideal.b())) % ideal.a() == 0;
}

bool contains(const QuadIdeal& outer, const QuadIdeal& inner) {
    auto [first, second] = inner.basis();
    return contains(outer, first) && contains(outer, second);
}

QuadIdeal operator*(const QuadIdeal& lhs, const QuadIdeal& rhs) {
    require_same_ring(lhs.d(), rhs.d());
    auto [a1, b1] = lhs.basis();
    auto [a2, b2] = rhs.basis();
    std::array<QuadInt, 4> products{a1 * a2, a1 * b2, b1 * a2, b1 * b2};
    return *ideal_from_generators(products);
}

QuadIdeal conjugate(const QuadIdeal& ideal) {
    auto [first, second] = ideal.basis();
    std::array<QuadInt, 2> gens{conjugate(first), conjugate(second)};
    return *ideal_from_generators(gens);
}

bool IdealOrder::operator()(const QuadIdeal& lhs, const QuadIdeal& rhs) const {
    return std::make_tuple(norm(lhs), lhs.a(), lhs.b(), lhs.c()) <
           std::make_tuple(norm(rhs), rhs.a(), rhs.b(), rhs.c());
}

}  // namespace quadfact
