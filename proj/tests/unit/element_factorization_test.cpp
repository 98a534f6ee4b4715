#include <doctest.h>

#include <random>

#include <quadfact/element_factorization.hpp>
#include <quadfact/pairing.hpp>

#include "support/oracles.hpp"

using namespace quadfact;

namespace {

QuadInt q(Int a, Int b) { return QuadInt(a, b, -5); }
QuadIdeal hnf(Int a, Int b, Int c) { return QuadIdeal::from_hnf(-5, a, b, c); }

Factorization fac(std::vector<QuadInt> factors, int unit = 1) { return {unit, std::move(factors)}; }

std::vector<QuadInt> canonical_elements(Int max_norm) {
    std::vector<QuadInt> out;
    for (Int a = 0; a * a <= max_norm; ++a) {
        for (Int b = -isqrt(max_norm / 5); 5 * b * b <= max_norm; ++b) {
            const QuadInt x = q(a, b);
            if (norm(x) > 1 && norm(x) <= max_norm && is_canonical_associate(x)) out.push_back(x);
        }
    }
    return out;
}

void check_certificate_sound(const QuadInt& x) {
    const auto cert = certify_irreducibility(x);
    if (const auto* two = std::get_if<TwoNonprincipal>(&cert)) {
        REQUIRE(two->first * two->second == principal_ideal(x));
        REQUIRE(ideal_class(two->first) == IdealClass::NonPrincipal);
        REQUIRE(ideal_class(two->second) == IdealClass::NonPrincipal);
    } else if (const auto* prime = std::get_if<PrimeElement>(&cert)) {
        REQUIRE(prime->prime == principal_ideal(x));
        REQUIRE(is_prime_ideal(prime->prime));
    } else if (const auto* red = std::get_if<Reducible>(&cert)) {
        REQUIRE(red->left * red->right == x);
        REQUIRE_FALSE(is_unit(red->left));
        REQUIRE_FALSE(is_unit(red->right));
    }
}

}  // namespace

TEST_CASE("irreducibility certificates") {
    const auto one_plus = certify_irreducibility(q(1, 1));
    REQUIRE(std::holds_alternative<TwoNonprincipal>(one_plus));
    CHECK(std::get<TwoNonprincipal>(one_plus).first == hnf(2, 1, 1));
    CHECK(std::get<TwoNonprincipal>(one_plus).second == hnf(3, 1, 1));

    const auto three = certify_irreducibility(q(3, 0));
    REQUIRE(std::holds_alternative<TwoNonprincipal>(three));
    CHECK(std::get<TwoNonprincipal>(three).first == hnf(3, 1, 1));
    CHECK(std::get<TwoNonprincipal>(three).second == hnf(3, 2, 1));

    const auto six = certify_irreducibility(q(6, 0));
    REQUIRE(std::holds_alternative<Reducible>(six));
    CHECK(std::get<Reducible>(six).left == q(2, 0));
    CHECK(std::get<Reducible>(six).right == q(3, 0));

    const auto eleven = certify_irreducibility(q(11, 0));
    REQUIRE(std::holds_alternative<PrimeElement>(eleven));
    CHECK(std::get<PrimeElement>(eleven).prime == principal_ideal(q(11, 0)));

    CHECK(std::holds_alternative<ZeroElement>(certify_irreducibility(q(0, 0))));
    CHECK(std::holds_alternative<UnitElement>(certify_irreducibility(q(-1, 0))));
    CHECK(is_irreducible(q(2, 0)));
    CHECK(is_irreducible(q(1, -1)));
    CHECK_FALSE(is_irreducible(q(4, 0)));
    CHECK_FALSE(is_irreducible(q(1, 0)));
}

TEST_CASE("enumerate factorizations") {
    CHECK(enumerate_factorizations(q(6, 0)) ==
          std::vector<Factorization>{fac({q(2, 0), q(3, 0)}), fac({q(1, -1), q(1, 1)})});
    CHECK(enumerate_factorizations(q(11, 0)) == std::vector<Factorization>{fac({q(11, 0)})});
    CHECK(enumerate_factorizations(q(4, 0)) == std::vector<Factorization>{fac({q(2, 0), q(2, 0)})});
    CHECK(enumerate_factorizations(q(-6, 0)) ==
          std::vector<Factorization>{fac({q(2, 0), q(3, 0)}, -1), fac({q(1, -1), q(1, 1)}, -1)});
    CHECK(enumerate_factorizations(q(9, 0)) ==
          std::vector<Factorization>{fac({q(2, -1), q(2, 1)}), fac({q(3, 0), q(3, 0)})});

    CHECK_THROWS_AS(enumerate_factorizations(q(1, 0)), domain_error);
    CHECK_THROWS_AS(enumerate_factorizations(q(0, 0)), domain_error);
    CHECK_THROWS_AS(enumerate_factorizations(QuadInt(6, 0, 2)), domain_error);
}

TEST_CASE("counting and length") {
    CHECK(count_factorizations(q(1980, 0)) == 6);
    CHECK(count_factorizations(q(6, 0)) == 2);
    CHECK(count_factorizations(q(9, 0)) == 2);

    CHECK(factorization_length(q(6, 0)) == 2);
    CHECK(factorization_length(q(1980, 0)) == 7);
    CHECK(factorization_length(q(11, 0)) == 1);

    const auto all = enumerate_factorizations(q(1980, 0));
    CHECK(all.size() == 6);
    for (const auto& f : all) {
        CHECK(f.length() == 7);
        CHECK(f.product() == q(1980, 0));
    }
}

TEST_CASE("closed-form eta for three nonprincipal primes") {
    CHECK(eta_x3(2, 2, 4, 4) == 6);
    CHECK(eta_x3(0, 0, 0, 0) == 1);
    CHECK(eta_x3(1, 1, 2, 2) == 2);
    CHECK_THROWS_AS(eta_x3(2, 1, 3, 3), domain_error);
    CHECK_THROWS_AS(eta_x3(1, 1, 1, 1), domain_error);
    CHECK_THROWS_AS(eta_x3(-1, 1, 2, 1), domain_error);
    for (int x3 = 0; x3 <= 12; ++x3) {
        for (int x2 = 0; x2 <= x3; ++x2) {
            for (int x1 = 0; x1 <= x2; ++x1) {
                if ((x1 + x2 + x3) % 2) continue;
                REQUIRE(eta_x3(x1, x2, x3, (x1 + x2 + x3) / 2) == oracle::pairing_count({x1, x2, x3}));
            }
        }
    }
}

TEST_CASE("brute-force oracle") {
    CHECK(brute_force_factorizations(q(6, 0)).size() == 2);
    const auto big = brute_force_factorizations(q(1980, 0));
    CHECK(big.size() == 6);
    for (const auto& f : big) CHECK(f.length() == 7);
    CHECK(brute_force_factorizations(q(11, 0)).size() == 1);
    CHECK(brute_force_factorizations(q(3, 2)).size() == 1);
    CHECK_THROWS_AS(brute_force_factorizations(q(1001, 0), 1'000'000), capacity_error);
    CHECK_THROWS_AS(brute_force_factorizations(q(3163, 0)), capacity_error);
    CHECK_THROWS_AS(brute_force_factorizations(q(1, 0)), domain_error);
}

TEST_CASE("property: ideal enumeration equals the oracle up to norm 3000") {
    for (const QuadInt& x : canonical_elements(3000)) {
        const auto via_ideals = enumerate_factorizations(x);
        const auto brute = brute_force_factorizations(x);
        REQUIRE(via_ideals == brute);
        const int length = factorization_length(x);
        REQUIRE(count_factorizations(x) == static_cast<Int>(via_ideals.size()));
        for (const auto& f : via_ideals) {
            REQUIRE(static_cast<int>(f.length()) == length);
            REQUIRE(f.product() == x);
            for (const QuadInt& atom : f.factors) {
                REQUIRE(is_canonical_associate(atom));
                REQUIRE(is_irreducible(atom));
            }
        }
        const auto nonprincipal = nonprincipal_multiplicities(factor_ideal(principal_ideal(x)));
        if (nonprincipal.size() == 3) {
            const Int total = nonprincipal[0] + nonprincipal[1] + nonprincipal[2];
            REQUIRE(eta_x3(nonprincipal[0], nonprincipal[1], nonprincipal[2], total / 2) ==
                    count_factorizations(x));
        }
        check_certificate_sound(x);
        if (is_prime(norm(x))) {
            const auto cert = certify_irreducibility(x);
            REQUIRE(is_irreducible(cert));
        }
    }
}

TEST_CASE("property: sampled elements up to norm 1e6 agree with the oracle") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> a_dist(0, 999);
    std::uniform_int_distribution<int> b_dist(-447, 447);
    int sampled = 0;
    while (sampled < 25) {
        const QuadInt x = canonical_associate(q(a_dist(rng), b_dist(rng)));
        if (norm(x) <= 1 || norm(x) > 1'000'000) continue;
        ++sampled;
        REQUIRE(enumerate_factorizations(x) == brute_force_factorizations(x));
    }
}
