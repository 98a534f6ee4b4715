#pragma once

#include <optional>
#include <span>
#include <utility>

#include "quadfact/quad_int.hpp"

namespace quadfact {

/// Nonzero ideal of Z[sqrt(d)], stored as the Hermite normal form of its
/// lattice: the Z-module a*Z + (b + c*sqrt(d))*Z with a, c > 0 and
/// 0 <= b < a.
///
/// Lattice invariants: c | a, c | b and a*c | b^2 - d*c^2. The last one is
/// closure under multiplication by sqrt(d). Equal ideals have identical
/// (a, b, c), so equality is a field comparison.
///
/// The zero ideal is not a QuadIdeal; constructors that can produce it
/// return std::optional.
class QuadIdeal {
public:
    /// Builds an ideal from HNF coordinates. Throws domain_error when the
    /// triple is not a canonical ideal basis.
    static QuadIdeal from_hnf(Int d, Int a, Int b, Int c);

    /// True when (a, b, c) is a canonical HNF triple of an ideal.
    static bool is_valid_hnf(Int d, Int a, Int b, Int c) noexcept;

    Int d() const noexcept { return d_; }
    Int a() const noexcept { return a_; }
    Int b() const noexcept { return b_; }
    Int c() const noexcept { return c_; }

    /// The canonical Z-basis (a, b + c*sqrt(d)).
    std::pair<QuadInt, QuadInt> basis() const;

    friend bool operator==(const QuadIdeal&, const QuadIdeal&) = default;

private:
    QuadIdeal(Int d, Int a, Int b, Int c) noexcept : d_(d), a_(a), b_(b), c_(c) {}

    Int d_;
    Int a_;
    Int b_;
    Int c_;
};

/// Ideal generated by the given elements; nullopt for the zero ideal.
/// Throws domain_error on an empty list or mismatched rings.
std::optional<QuadIdeal> ideal_from_generators(std::span<const QuadInt> gens);

/// <x> for x != 0. Throws domain_error for x == 0.
QuadIdeal principal_ideal(const QuadInt& x);

/// <1> = Z[sqrt(d)].
QuadIdeal unit_ideal(Int d);

/// |Z[sqrt(d)] / I| = a*c.
Int norm(const QuadIdeal& ideal);

bool contains(const QuadIdeal& ideal, const QuadInt& x);

/// True iff outer contains inner, i.e. outer divides inner.
bool contains(const QuadIdeal& outer, const QuadIdeal& inner);

QuadIdeal operator*(const QuadIdeal& lhs, const QuadIdeal& rhs);

/// Ideal generated by the conjugates of the basis.
QuadIdeal conjugate(const QuadIdeal& ideal);

/// Strict weak order by (norm, a, b, c).
struct IdealOrder {
    bool operator()(const QuadIdeal& lhs, const QuadIdeal& rhs) const;
};

}  // namespace quadfact
