#include <doctest.h>

#include <random>

#include <quadfact/quad_int.hpp>

using namespace quadfact;

namespace {

QuadInt q(Int a, Int b, Int d = -5) { return QuadInt(a, b, d); }

}  // namespace

TEST_CASE("ring parameter validation") {
    CHECK_NOTHROW(q(0, 0, -5));
    CHECK_NOTHROW(q(0, 0, 2));
    CHECK_NOTHROW(q(0, 0, 3));
    CHECK_NOTHROW(q(0, 0, -1));
    CHECK_THROWS_AS(q(0, 0, 0), domain_error);
    CHECK_THROWS_AS(q(0, 0, 1), domain_error);
    CHECK_THROWS_AS(q(0, 0, -3), domain_error);  // 1 mod 4
    CHECK_THROWS_AS(q(0, 0, 5), domain_error);   // 1 mod 4
    CHECK_THROWS_AS(q(0, 0, 12), domain_error);  // not squarefree
    CHECK_THROWS_AS(q(0, 0, -18), domain_error);
}

TEST_CASE("multiplication") {
    CHECK(q(1, 1) * q(1, -1) == q(6, 0));
    CHECK(q(2, 1) * q(2, -1) == q(9, 0));
    const QuadInt x = q(4, -7);
    CHECK(q(1, 0) * x == x);
    CHECK_THROWS_AS(q(1, 1) * q(1, 1, 2), domain_error);
    CHECK_THROWS_AS(q(1, 1) + q(1, 1, 3), domain_error);
}

TEST_CASE("norm, trace and units") {
    CHECK(norm(q(1, 1)) == 6);
    CHECK(norm(q(0, 0)) == 0);
    CHECK(norm(q(2, 1)) == 9);
    CHECK(norm(q(1, 1, 2)) == -1);

    CHECK(trace(q(3, 4)) == 6);
    CHECK(trace(q(0, 0)) == 0);
    CHECK(trace(q(0, 1)) == 0);

    CHECK(is_unit(q(-1, 0)));
    CHECK(is_unit(q(1, 0)));
    CHECK_FALSE(is_unit(q(1, 1)));
    CHECK_FALSE(is_unit(q(2, 0)));
}

TEST_CASE("conjugation") {
    CHECK(conjugate(q(1, 2)) == q(1, -2));
    CHECK(conjugate(q(7, 0)) == q(7, 0));
    const QuadInt x = q(1, 1);
    const QuadInt y = q(2, -1);
    CHECK(x * y == q(7, 1));
    CHECK(conjugate(x * y) == q(7, -1));
    CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
}

TEST_CASE("exact division") {
    CHECK(divide(q(6, 0), q(1, 1)) == q(1, -1));
    const QuadInt x = q(-3, 8);
    CHECK(divide(x, q(1, 0)) == x);
    CHECK_FALSE(divide(q(3, 0), q(2, 0)).has_value());
    CHECK_THROWS_AS(divide(q(3, 0), q(0, 0)), domain_error);
}

TEST_CASE("discriminant of a pair") {
    for (Int d : {-5, 2, 3, -1, -2}) {
        CHECK(discriminant_pair(q(1, 0, d), q(0, 1, d)) == 4 * d);
    }
    CHECK(discriminant_pair(q(2, 3), q(2, 3)) == 0);
    // 4 * (-5) * (3*3 - 0*0)^2
    CHECK(discriminant_pair(q(3, 0), q(0, 3)) == -1620);
    CHECK_THROWS_AS(discriminant_pair(q(1, 0), q(0, 1, 2)), domain_error);
}

TEST_CASE("canonical associate") {
    CHECK(canonical_associate(q(-1, 1)) == q(1, -1));
    CHECK(canonical_associate(q(0, -3)) == q(0, 3));
    CHECK(canonical_associate(q(2, -1)) == q(2, -1));
    CHECK(is_canonical_associate(q(0, 1)));
    CHECK_FALSE(is_canonical_associate(q(0, 0)));
}

TEST_CASE("property: norm multiplicative, conjugation an automorphism") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(-50, 50);
    for (Int d : {-5, -1, 2, 3}) {
        for (int i = 0; i < 2000; ++i) {
            const QuadInt x = q(coord(rng), coord(rng), d);
            const QuadInt y = q(coord(rng), coord(rng), d);
            REQUIRE(norm(x * y) == norm(x) * norm(y));
            REQUIRE(conjugate(x * y) == conjugate(x) * conjugate(y));
            REQUIRE(conjugate(x + y) == conjugate(x) + conjugate(y));
            REQUIRE(conjugate(conjugate(x)) == x);
            const QuadInt xx = x * conjugate(x);
            REQUIRE(xx.b() == 0);
            REQUIRE(xx.a() == norm(x));
            if (d < 0) REQUIRE((norm(x) == 0) == x.is_zero());
            if (!y.is_zero()) REQUIRE(divide(x * y, y) == x);
        }
    }
}

TEST_CASE("property: discriminant under unimodular change of basis") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coord(-9, 9);
    for (Int d : {-5, 2, 3, -1, -2}) {
        int tried = 0;
        while (tried < 200) {
            const Int p = coord(rng), r = coord(rng), s = coord(rng), t = coord(rng);
            const Int det = p * t - r * s;
            if (det != 1 && det != -1) continue;
            ++tried;
            // Rows of U applied to the basis (1, sqrt d).
            const QuadInt first = q(p, r, d);
            const QuadInt second = q(s, t, d);
            REQUIRE(discriminant_pair(first, second) == 4 * d);
        }
    }
}

TEST_CASE("checked arithmetic reports overflow") {
    const Int big = Int{1} << 100;
    CHECK_THROWS_AS(q(big, 0) * q(big, 0), capacity_error);
}
