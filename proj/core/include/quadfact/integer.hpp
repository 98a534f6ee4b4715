#pragma once

// Checked 128-bit integer arithmetic and rational-integer utilities.
//
// Every coordinate, norm and lattice entry in the library is an `Int`.
// Operations that would overflow the 128-bit width raise capacity_error
// instead of wrapping.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quadfact/errors.hpp"

namespace quadfact {

using Int = __int128;

/// Largest coordinate magnitude accepted from text input (2^40).
inline constexpr Int kCoordinateBound = Int{1} << 40;

/// Default ceiling on integers handed to trial-division factoring.
inline constexpr Int kDefaultFactorBound = 100'000'000;

namespace checked {

[[noreturn]] void overflow(const char* op);

inline Int add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) overflow("addition");
    return r;
}

inline Int sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) overflow("subtraction");
    return r;
}

inline Int mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) overflow("multiplication");
    return r;
}

inline Int neg(Int x) { return sub(0, x); }

}  // namespace checked

inline Int abs(Int x) { return x < 0 ? checked::neg(x) : x; }

/// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(Int x, Int y);

/// Floor division and the matching non-negative remainder (for y > 0).
Int floor_div(Int x, Int y);
Int floor_mod(Int x, Int y);

/// Floor of the square root of n >= 0.
Int isqrt(Int n);

bool is_perfect_square(Int n);

/// Deterministic primality by trial division.
bool is_prime(Int n);

struct PrimePower {
    Int prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factors n >= 1 into ascending prime powers by trial division.
/// Throws capacity_error when n > bound.
std::vector<PrimePower> factor_integer(Int n, Int bound = kDefaultFactorBound);

/// Returns base^exp (checked).
Int ipow(Int base, int exp);

std::string to_string(Int x);

/// Parses an optionally signed decimal integer. Throws parse_error.
Int parse_int(std::string_view text);

std::ostream& operator<<(std::ostream& os, Int x);

}  // namespace quadfact
