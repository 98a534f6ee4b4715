#pragma once

#include <optional>
#include <string_view>

#include "quadfact/quad_ideal.hpp"

namespace quadfact {

/// Throws domain_error unless d == -5.
void require_minus_five(Int d);

/// Witness that an ideal I is invertible: I * partner == <scale>.
struct InversePair {
    QuadIdeal partner;
    Int scale;
};

/// partner = conjugate(I); scale = gcd(N(alpha), alpha*conj(beta) + conj(alpha)*beta,
/// N(beta)) over the content-free basis (alpha, beta), times the squared content.
InversePair inverse_pair(const QuadIdeal& ideal);

/// K with divisor * K == dividend, or nullopt when divisor does not divide
/// dividend.
std::optional<QuadIdeal> divide(const QuadIdeal& dividend, const QuadIdeal& divisor);

/// Canonical-associate generator of a principal ideal, nullopt otherwise.
/// Searches x^2 + 5y^2 == N(I).
std::optional<QuadInt> principal_generator(const QuadIdeal& ideal);

/// The two classes of the class group Z/2 of Z[sqrt(-5)].
enum class IdealClass { Principal, NonPrincipal };

IdealClass ideal_class(const QuadIdeal& ideal);

/// Group law of Z/2 on classes.
IdealClass operator*(IdealClass lhs, IdealClass rhs);

std::string_view to_string(IdealClass cls);

}  // namespace quadfact
