#include "quadfact/element_factorization.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "quadfact/pairing.hpp"

namespace quadfact {

using checked::add;
using checked::mul;
using checked::sub;

namespace {

void require_nonzero_nonunit(const QuadInt& x) {
    require_minus_five(x.d());
    if (x.is_zero()) throw domain_error("zero has no factorization");
    if (is_unit(x)) throw domain_error("units have no factorization");
}

QuadInt generator_of(const QuadIdeal& ideal) {
    auto gen = principal_generator(ideal);
    if (!gen) throw std::logic_error("expected a principal ideal");
    return *gen;
}

QuadInt exact_quotient(const QuadInt& x, const QuadInt& y) {
    auto q = divide(x, y);
    if (!q) throw std::logic_error("expected an exact element quotient");
    return *q;
}

// Completes a sorted factor list into a Factorization of x.
Factorization finish(const QuadInt& x, std::vector<QuadInt> factors) {
    std::sort(factors.begin(), factors.end(), NormOrder{});
    Factorization f{1, std::move(factors)};
    const QuadInt u = exact_quotient(x, f.product());
    if (u.b() != 0 || (u.a() != 1 && u.a() != -1)) {
        throw std::logic_error("factor product differs from target by a non-unit");
    }
    f.unit = static_cast<int>(u.a());
    return f;
}

void sort_unique(std::vector<Factorization>& list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace

QuadInt Factorization::product() const {
    QuadInt acc = QuadInt::rational(unit, factors.empty() ? kMinusFive : factors.front().d());
    for (const QuadInt& f : factors) acc = acc * f;
    return acc;
}

bool operator<(const Factorization& lhs, const Factorization& rhs) {
    if (std::lexicographical_compare(lhs.factors.begin(), lhs.factors.end(), rhs.factors.begin(),
                                     rhs.factors.end(), NormOrder{})) {
        return true;
    }
    if (std::lexicographical_compare(rhs.factors.begin(), rhs.factors.end(), lhs.factors.begin(),
                                     lhs.factors.end(), NormOrder{})) {
        return false;
    }
    return lhs.unit < rhs.unit;
}

IrreducibilityCertificate certify_irreducibility(const QuadInt& x, Int norm_bound) {
    require_minus_five(x.d());
    if (x.is_zero()) return ZeroElement{};
    if (is_unit(x)) return UnitElement{};

    const PrimeFactorization pf = factor_ideal(principal_ideal(x), norm_bound);
    if (pf.factors.size() == 1 && pf.factors.front().exponent == 1) {
        return PrimeElement{pf.factors.front().prime};
    }

    // Flatten with multiplicity, principal primes first.
    std::vector<QuadIdeal> principal;
    std::vector<QuadIdeal> nonprincipal;
    for (const PrimeFactor& f : pf.factors) {
        auto& bucket = f.ideal_class == IdealClass::Principal ? principal : nonprincipal;
        for (int i = 0; i < f.exponent; ++i) bucket.push_back(f.prime);
    }
    if (principal.empty() && nonprincipal.size() == 2) {
        return TwoNonprincipal{nonprincipal[0], nonprincipal[1]};
    }

    const QuadInt left = principal.empty() ? generator_of(nonprincipal[0] * nonprincipal[1])
                                           : generator_of(principal.front());
    return Reducible{left, exact_quotient(x, left)};
}

bool is_irreducible(const IrreducibilityCertificate& cert) {
    return std::holds_alternative<PrimeElement>(cert) ||
           std::holds_alternative<TwoNonprincipal>(cert);
}

std::vector<int> nonprincipal_multiplicities(const PrimeFactorization& pf) {
    std::vector<int> out;
    for (const PrimeFactor& f : pf.factors) {
        if (f.ideal_class == IdealClass::NonPrincipal) out.push_back(f.exponent);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Factorization> enumerate_factorizations(const QuadInt& x, Int norm_bound) {
    require_nonzero_nonunit(x);
    const PrimeFactorization pf = factor_ideal(principal_ideal(x), norm_bound);

    std::vector<QuadInt> fixed;
    std::vector<QuadIdeal> atoms;
    std::vector<int> multiplicity;
    for (const PrimeFactor& f : pf.factors) {
        if (f.ideal_class == IdealClass::Principal) {
            fixed.insert(fixed.end(), f.exponent, generator_of(f.prime));
        } else {
            atoms.push_back(f.prime);
            multiplicity.push_back(f.exponent);
        }
    }

    std::map<std::pair<std::size_t, std::size_t>, QuadInt> pair_generator;
    auto generator_for = [&](std::size_t i, std::size_t j) -> const QuadInt& {
        auto key = std::make_pair(i, j);
        auto it = pair_generator.find(key);
        if (it == pair_generator.end()) {
            it = pair_generator.emplace(key, generator_of(atoms[i] * atoms[j])).first;
        }
        return it->second;
    };

    std::vector<Factorization> out;
    for (const Pairing& pairing : enumerate_pairings(multiplicity)) {
        std::vector<QuadInt> factors = fixed;
        for (const PairUse& use : pairing) {
            factors.insert(factors.end(), use.count, generator_for(use.first, use.second));
        }
        out.push_back(finish(x, std::move(factors)));
    }
    sort_unique(out);
    return out;
}

Int count_factorizations(const QuadInt& x, Int norm_bound) {
    require_nonzero_nonunit(x);
    const PrimeFactorization pf = factor_ideal(principal_ideal(x), norm_bound);
    return count_pairings(nonprincipal_multiplicities(pf));
}

int factorization_length(const QuadInt& x, Int norm_bound) {
    require_nonzero_nonunit(x);
    const PrimeFactorization pf = factor_ideal(principal_ideal(x), norm_bound);
    int principal = 0;
    int nonprincipal = 0;
    for (const PrimeFactor& f : pf.factors) {
        (f.ideal_class == IdealClass::Principal ? principal : nonprincipal) += f.exponent;
    }
    if (nonprincipal % 2 != 0) throw std::logic_error("odd number of nonprincipal prime factors");
    return principal + nonprincipal / 2;
}

Int eta_x3(Int x1, Int x2, Int x3, Int x4) {
    if (x1 < 0 || x1 > x2 || x2 > x3) {
        throw domain_error("eta_x3 requires 0 <= x1 <= x2 <= x3");
    }
    if (add(add(x1, x2), x3) != mul(2, x4)) {
        throw domain_error("eta_x3 requires x1 + x2 + x3 == 2 x4");
    }
    Int total = 0;
    for (Int j = 0; j <= x1 / 2; ++j) {
        for (Int k = 0; k <= x1 - 2 * j; ++k) {
            const Int smallest = std::min(x2 - k, x3 - x1 + 2 * j + k);
            if (smallest < 0) continue;
            total = add(total, smallest / 2 + 1);
        }
    }
    return total;
}

namespace {

// Recursive divisor search using only element arithmetic and the form
// x^2 + 5y^2.
class DivisorSearch {
public:
    explicit DivisorSearch(Int d) : d_(d) {}

    // Canonical proper divisors (1 < N(z) < N(y)) of a canonical y.
    const std::vector<QuadInt>& proper_divisors(const QuadInt& y) {
        auto key = std::make_pair(y.a(), y.b());
        if (auto it = divisors_.find(key); it != divisors_.end()) return it->second;
        std::vector<QuadInt> found;
        const Int n = norm(y);
        for (Int m : norm_divisors(n)) {
            if (m == 1 || m == n) continue;
            for (const QuadInt& z : elements_of_norm(m)) {
                if (divide(y, z)) found.push_back(z);
            }
        }
        return divisors_.emplace(key, std::move(found)).first->second;
    }

    bool irreducible(const QuadInt& y) { return proper_divisors(y).empty(); }

    // Sorted, duplicate-free factor multisets of a canonical y.
    const std::vector<std::vector<QuadInt>>& factor_sets(const QuadInt& y) {
        auto key = std::make_pair(y.a(), y.b());
        if (auto it = factorizations_.find(key); it != factorizations_.end()) return it->second;
        std::set<std::vector<QuadInt>, MultisetOrder> found;
        const auto& divisors = proper_divisors(y);
        if (divisors.empty()) {
            found.insert({y});
        } else {
            for (const QuadInt& z : divisors) {
                if (!irreducible(z)) continue;
                const QuadInt rest = canonical_associate(*divide(y, z));
                for (std::vector<QuadInt> tail : factor_sets(rest)) {
                    tail.insert(std::upper_bound(tail.begin(), tail.end(), z, NormOrder{}), z);
                    found.insert(std::move(tail));
                }
            }
        }
        return factorizations_.emplace(key, std::vector(found.begin(), found.end()))
            .first->second;
    }

private:
    struct MultisetOrder {
        bool operator()(const std::vector<QuadInt>& l, const std::vector<QuadInt>& r) const {
            return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end(),
                                                NormOrder{});
        }
    };

    static std::vector<Int> norm_divisors(Int n) {
        std::vector<Int> out{1};
        for (const PrimePower& pp : factor_integer(n, n)) {
            const std::size_t base = out.size();
            Int power = 1;
            for (int e = 1; e <= pp.exponent; ++e) {
                power = mul(power, pp.prime);
                for (std::size_t i = 0; i < base; ++i) out.push_back(mul(out[i], power));
            }
        }
        return out;
    }

    // Canonical associates with u^2 + 5 v^2 == m.
    std::vector<QuadInt> elements_of_norm(Int m) const {
        std::vector<QuadInt> out;
        for (Int v = 0; 5 * v * v <= m; ++v) {
            const Int rest = sub(m, mul(5, mul(v, v)));
            if (!is_perfect_square(rest)) continue;
            const Int u = isqrt(rest);
            if (u == 0) {
                out.emplace_back(0, v, d_);
            } else if (v == 0) {
                out.emplace_back(u, 0, d_);
            } else {
                out.emplace_back(u, v, d_);
                out.emplace_back(u, -v, d_);
            }
        }
        return out;
    }

    Int d_;
    std::map<std::pair<Int, Int>, std::vector<QuadInt>> divisors_;
    std::map<std::pair<Int, Int>, std::vector<std::vector<QuadInt>>> factorizations_;
};

}  // namespace

std::vector<Factorization> brute_force_factorizations(const QuadInt& x, Int norm_bound) {
    require_nonzero_nonunit(x);
    if (norm(x) > norm_bound) {
        throw capacity_error("norm " + to_string(norm(x)) + " exceeds oracle bound " +
                             to_string(norm_bound));
    }
    DivisorSearch search(x.d());
    std::vector<Factorization> out;
    for (const auto& factors : search.factor_sets(canonical_associate(x))) {
        out.push_back(finish(x, factors));
    }
    sort_unique(out);
    return out;
}

}  // namespace quadfact
