#pragma once

// Coverings of a multiset of atoms by unordered pairs.
//
// Atom i occurs multiplicities[i] times. A pairing is a multiset of pairs
// {i, j} (i <= j) using every occurrence exactly once, i.e. a solution of
//   2 e_ii + sum_{j != i} e_ij = m_i,   e_ij >= 0.
// Both half-factorial systems in the library (nonprincipal prime ideals of
// Z[sqrt(-5)] and 3-mod-4 primes in the Hilbert monoid) factor exactly by
// such pairings.

#include <cstddef>
#include <span>
#include <vector>

#include "quadfact/integer.hpp"

namespace quadfact {

struct PairUse {
    std::size_t first;   // first <= second
    std::size_t second;
    int count;

    friend bool operator==(const PairUse&, const PairUse&) = default;
};

/// Nonzero pair counts in ascending (first, second) order.
using Pairing = std::vector<PairUse>;

/// All pairings, in lexicographic order of the choice sequence. Returns an
/// empty list when the total multiplicity is odd; a single empty pairing
/// when it is zero.
std::vector<Pairing> enumerate_pairings(std::span<const int> multiplicities);

/// Number of pairings, by memoized dynamic programming over remaining
/// multiplicities.
Int count_pairings(std::span<const int> multiplicities);

}  // namespace quadfact
