#include "quadfact/prime_spectrum.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace quadfact {

using checked::mul;

namespace {

void require_prime(Int p) {
    if (!is_prime(p)) throw domain_error(to_string(p) + " is not a rational prime");
}

Int pow_mod(Int base, Int exp, Int mod) {
    Int result = 1 % mod;
    base = floor_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) result = mul(result, base) % mod;
        base = mul(base, base) % mod;
        exp >>= 1;
    }
    return result;
}

// Tonelli-Shanks square root of a quadratic residue n modulo an odd prime p.
Int tonelli_shanks(Int n, Int p) {
    Int q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    int m = s;
    Int c = pow_mod(z, q, p);
    Int t = pow_mod(n, q, p);
    Int r = pow_mod(n, (q + 1) / 2, p);
    while (t != 1) {
        int i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = mul(t2, t2) % p;
            ++i;
        }
        Int b = c;
        for (int k = 0; k < m - i - 1; ++k) b = mul(b, b) % p;
        m = i;
        c = mul(b, b) % p;
        t = mul(t, c) % p;
        r = mul(r, b) % p;
    }
    return r;
}

PrimeFactor labelled(const QuadIdeal& prime, int exponent) {
    return {prime, exponent, ideal_class(prime)};
}

}  // namespace

std::string_view to_string(SplitType type) {
    switch (type) {
        case SplitType::Inert: return "Inert";
        case SplitType::Ramified: return "Ramified";
        case SplitType::Split: return "Split";
    }
    return "?";
}

SplitType classify_prime(Int p) {
    require_prime(p);
    if (p == 2 || p == 5) return SplitType::Ramified;
    switch (static_cast<int>(p % 20)) {
        case 1:
        case 3:
        case 7:
        case 9: return SplitType::Split;
        default: return SplitType::Inert;
    }
}

std::optional<Int> sqrt_minus_five_mod(Int p) {
    require_prime(p);
    if (p == 2 || p == 5) throw domain_error("sqrt(-5) mod p requires an odd prime p != 5");
    const Int n = floor_mod(-5, p);
    if (pow_mod(n, (p - 1) / 2, p) != 1) return std::nullopt;
    const Int t = tonelli_shanks(n, p);
    return std::min(t, p - t);
}

QuadIdeal PrimeFactorization::product(Int d) const {
    QuadIdeal acc = unit_ideal(factors.empty() ? d : factors.front().prime.d());
    for (const PrimeFactor& f : factors) {
        for (int i = 0; i < f.exponent; ++i) acc = acc * f.prime;
    }
    return acc;
}

int PrimeFactorization::total_exponent() const {
    int total = 0;
    for (const PrimeFactor& f : factors) total += f.exponent;
    return total;
}

PrimeFactorization factor_rational_prime(Int p) {
    const SplitType type = classify_prime(p);
    PrimeFactorization out;
    if (type == SplitType::Ramified) {
        const QuadInt second = p == 2 ? QuadInt(1, 1, kMinusFive) : QuadInt(0, 1, kMinusFive);
        std::array<QuadInt, 2> gens{QuadInt::rational(p, kMinusFive), second};
        out.factors.push_back(labelled(*ideal_from_generators(gens), 2));
    } else if (type == SplitType::Split) {
        const auto t = sqrt_minus_five_mod(p);
        if (!t) throw std::logic_error("split prime without a square root of -5");
        std::array<QuadInt, 2> plus{QuadInt::rational(p, kMinusFive), QuadInt(*t, 1, kMinusFive)};
        std::array<QuadInt, 2> minus{QuadInt::rational(p, kMinusFive), QuadInt(*t, -1, kMinusFive)};
        out.factors.push_back(labelled(*ideal_from_generators(plus), 1));
        out.factors.push_back(labelled(*ideal_from_generators(minus), 1));
        std::sort(out.factors.begin(), out.factors.end(),
                  [](const PrimeFactor& x, const PrimeFactor& y) {
                      return IdealOrder{}(x.prime, y.prime);
                  });
    } else {
        out.factors.push_back(labelled(principal_ideal(QuadInt::rational(p, kMinusFive)), 1));
    }
    return out;
}

bool is_prime_ideal(const QuadIdeal& ideal) {
    require_minus_five(ideal.d());
    const Int n = norm(ideal);
    if (is_prime(n)) return true;
    if (!is_perfect_square(n)) return false;
    const Int p = isqrt(n);
    return is_prime(p) && classify_prime(p) == SplitType::Inert &&
           ideal == principal_ideal(QuadInt::rational(p, kMinusFive));
}

int valuation(const QuadIdeal& ideal, const QuadIdeal& prime) {
    if (norm(prime) == 1) throw domain_error("valuation at the unit ideal is undefined");
    int k = 0;
    QuadIdeal rest = ideal;
    while (auto quotient = divide(rest, prime)) {
        rest = *quotient;
        ++k;
    }
    return k;
}

PrimeFactorization factor_ideal(const QuadIdeal& ideal, Int norm_bound) {
    require_minus_five(ideal.d());
    const Int n = norm(ideal);
    if (n == 1) throw domain_error("the unit ideal has no prime factorization");
    PrimeFactorization out;
    for (const PrimePower& pp : factor_integer(n, norm_bound)) {
        for (const PrimeFactor& candidate : factor_rational_prime(pp.prime).factors) {
            const int e = valuation(ideal, candidate.prime);
            if (e > 0) out.factors.push_back({candidate.prime, e, candidate.ideal_class});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimeFactor& x, const PrimeFactor& y) {
                  return IdealOrder{}(x.prime, y.prime);
              });
    if (out.product() != ideal) {
        throw std::logic_error("prime factorization does not reconstruct the ideal");
    }
    return out;
}

}  // namespace quadfact
