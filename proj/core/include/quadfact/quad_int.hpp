#pragma once

#include <optional>

#include "quadfact/integer.hpp"

namespace quadfact {

/// The ring parameter used throughout the factorization layers.
inline constexpr Int kMinusFive = -5;

/// Throws domain_error unless d is squarefree, d mod 4 is 2 or 3, and
/// d is not 0 or 1.
void require_valid_ring_parameter(Int d);

/// Element a + b*sqrt(d) of Z[sqrt(d)].
///
/// The ring parameter travels with every value. Mixing values from
/// different rings raises domain_error.
class QuadInt {
public:
    /// Validates d. Use this for values built from untrusted input.
    QuadInt(Int a, Int b, Int d);

    /// The rational integer n viewed in Z[sqrt(d)].
    static QuadInt rational(Int n, Int d) { return QuadInt(n, 0, d); }

    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    Int d() const noexcept { return d_; }

    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x);

    friend bool operator==(const QuadInt&, const QuadInt&) = default;

private:
    struct trusted_t {};
    QuadInt(Int a, Int b, Int d, trusted_t) noexcept : a_(a), b_(b), d_(d) {}

    friend QuadInt conjugate(const QuadInt& x);
    friend std::optional<QuadInt> divide(const QuadInt& x, const QuadInt& y);

    Int a_;
    Int b_;
    Int d_;
};

/// a^2 - d b^2.
Int norm(const QuadInt& x);

/// a - b*sqrt(d).
QuadInt conjugate(const QuadInt& x);

/// 2a.
Int trace(const QuadInt& x);

bool is_unit(const QuadInt& x);

/// Exact quotient x / y, or nullopt when it is not in Z[sqrt(d)].
/// Throws domain_error for y == 0 or mismatched rings.
std::optional<QuadInt> divide(const QuadInt& x, const QuadInt& y);

/// 4d (a1 b2 - a2 b1)^2, the discriminant of the pair (x, y).
Int discriminant_pair(const QuadInt& x, const QuadInt& y);

/// Representative of {x, -x} with a > 0, or a == 0 and b > 0.
/// Only meaningful as "the" associate when d < 0.
QuadInt canonical_associate(const QuadInt& x);

bool is_canonical_associate(const QuadInt& x);

/// Strict weak order by (norm, a, b); the display order for factor lists.
struct NormOrder {
    bool operator()(const QuadInt& x, const QuadInt& y) const;
};

void require_same_ring(Int d1, Int d2);

}  // namespace quadfact
