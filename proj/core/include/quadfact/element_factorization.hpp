#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "quadfact/prime_spectrum.hpp"

namespace quadfact {

/// Default norm ceiling for the brute-force oracle.
inline constexpr Int kDefaultOracleBound = 10'000'000;

// Irreducibility certificates. An element of Z[sqrt(-5)] is irreducible
// exactly when <x> is a prime ideal or a product of two nonprincipal prime
// ideals.
struct ZeroElement {};
struct UnitElement {};
struct PrimeElement {
    QuadIdeal prime;
};
struct TwoNonprincipal {
    QuadIdeal first;
    QuadIdeal second;
};
/// left * right == x with both factors nonunits.
struct Reducible {
    QuadInt left;
    QuadInt right;
};

using IrreducibilityCertificate =
    std::variant<ZeroElement, UnitElement, PrimeElement, TwoNonprincipal, Reducible>;

IrreducibilityCertificate certify_irreducibility(const QuadInt& x,
                                                 Int norm_bound = kDefaultFactorBound);

bool is_irreducible(const IrreducibilityCertificate& cert);

inline bool is_irreducible(const QuadInt& x) { return is_irreducible(certify_irreducibility(x)); }

/// x == unit * product(factors); factors are canonical associates sorted by
/// NormOrder.
struct Factorization {
    int unit = 1;
    std::vector<QuadInt> factors;

    std::size_t length() const { return factors.size(); }
    QuadInt product() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;
    friend bool operator<(const Factorization& lhs, const Factorization& rhs);
};

/// Multiplicities of the nonprincipal primes in a factorization, ascending.
std::vector<int> nonprincipal_multiplicities(const PrimeFactorization& pf);

/// Every factorization of a nonzero nonunit x into irreducibles, up to
/// order and units, sorted. Built from the prime ideal factorization of <x>.
std::vector<Factorization> enumerate_factorizations(const QuadInt& x,
                                                    Int norm_bound = kDefaultFactorBound);

/// Number of factorizations, via the pairing count on nonprincipal primes.
Int count_factorizations(const QuadInt& x, Int norm_bound = kDefaultFactorBound);

/// Common length of every factorization of x.
int factorization_length(const QuadInt& x, Int norm_bound = kDefaultFactorBound);

/// Closed-form factorization count of (x1, x2, x3, x4) in the monoid of
/// vectors with x1 + x2 + x3 == 2 x4. Requires x1 <= x2 <= x3.
Int eta_x3(Int x1, Int x2, Int x3, Int x4);

/// Independent oracle: factorizations found by recursive divisor search
/// over x^2 + 5y^2 without any ideal machinery. Throws capacity_error when
/// norm(x) > norm_bound.
std::vector<Factorization> brute_force_factorizations(const QuadInt& x,
                                                      Int norm_bound = kDefaultOracleBound);

}  // namespace quadfact
