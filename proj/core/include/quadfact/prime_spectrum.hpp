#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "quadfact/ideal_arith.hpp"

namespace quadfact {

/// How a rational prime p decomposes in Z[sqrt(-5)].
enum class SplitType { Inert, Ramified, Split };

std::string_view to_string(SplitType type);

/// Ramified for 2 and 5, Split when p mod 20 is 1, 3, 7 or 9, Inert
/// otherwise. Throws domain_error when p is not prime.
SplitType classify_prime(Int p);

/// Smallest t in [1, p-1] with t^2 == -5 (mod p), or nullopt when -5 is
/// not a square mod p. Requires an odd prime p != 5.
std::optional<Int> sqrt_minus_five_mod(Int p);

struct PrimeFactor {
    QuadIdeal prime;
    int exponent;
    IdealClass ideal_class;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Prime ideal factorization, sorted by (norm, a, b, c) without repeats.
struct PrimeFactorization {
    std::vector<PrimeFactor> factors;

    /// Product of all prime powers; <1> for an empty list.
    QuadIdeal product(Int d = kMinusFive) const;

    /// Total number of prime factors counted with multiplicity.
    int total_exponent() const;

    friend bool operator==(const PrimeFactorization&, const PrimeFactorization&) = default;
};

/// Factorization of <p>: P^2 when ramified, P * P' when split, <p> when inert.
PrimeFactorization factor_rational_prime(Int p);

bool is_prime_ideal(const QuadIdeal& ideal);

/// Largest k such that prime^k divides ideal.
int valuation(const QuadIdeal& ideal, const QuadIdeal& prime);

/// Unique factorization of a nonzero proper ideal into prime ideals.
/// Throws domain_error for <1> and capacity_error when N(I) > norm_bound.
PrimeFactorization factor_ideal(const QuadIdeal& ideal, Int norm_bound = kDefaultFactorBound);

}  // namespace quadfact
