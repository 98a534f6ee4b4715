#pragma once

#include <vector>

#include "quadfact/integer.hpp"

namespace quadfact {

/// Element of the Hilbert monoid H = {1 + 4k : k >= 0} under multiplication.
class HilbertElement {
public:
    /// Throws domain_error unless n >= 1 and n == 1 (mod 4).
    explicit HilbertElement(Int n);

    Int value() const noexcept { return n_; }

    friend bool operator==(const HilbertElement&, const HilbertElement&) = default;

private:
    Int n_;
};

/// Irreducible iff n is a prime == 1 (mod 4) or a product of exactly two
/// primes == 3 (mod 4). Throws domain_error for the unit 1.
bool is_irreducible(const HilbertElement& n, Int bound = kDefaultFactorBound);

/// Each factorization is an ascending list of irreducible elements of H;
/// the list of factorizations is sorted lexicographically.
std::vector<std::vector<Int>> enumerate_factorizations(const HilbertElement& n,
                                                       Int bound = kDefaultFactorBound);

/// Number of factorizations via the pairing count on 3-mod-4 primes.
Int count_factorizations(const HilbertElement& n, Int bound = kDefaultFactorBound);

}  // namespace quadfact
