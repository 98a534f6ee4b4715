#include "quadfact/hilbert_monoid.hpp"

#include <algorithm>

#include "quadfact/pairing.hpp"

namespace quadfact {

namespace {

struct Split {
    std::vector<Int> fixed;         // 1-mod-4 primes with multiplicity
    std::vector<Int> paired_atoms;  // distinct 3-mod-4 primes
    std::vector<int> multiplicity;
};

Split split_primes(const HilbertElement& n, Int bound) {
    if (n.value() == 1) throw domain_error("1 is the unit of the Hilbert monoid");
    Split s;
    for (const PrimePower& pp : factor_integer(n.value(), bound)) {
        if (pp.prime % 4 == 1) {
            s.fixed.insert(s.fixed.end(), pp.exponent, pp.prime);
        } else {
            s.paired_atoms.push_back(pp.prime);
            s.multiplicity.push_back(pp.exponent);
        }
    }
    return s;
}

}  // namespace

HilbertElement::HilbertElement(Int n) : n_(n) {
    if (n < 1 || n % 4 != 1) {
        throw domain_error(to_string(n) + " is not in the Hilbert monoid 1 + 4N");
    }
}

bool is_irreducible(const HilbertElement& n, Int bound) {
    const Split s = split_primes(n, bound);
    int paired = 0;
    for (int m : s.multiplicity) paired += m;
    if (s.fixed.size() == 1 && paired == 0) return true;
    return s.fixed.empty() && paired == 2;
}

std::vector<std::vector<Int>> enumerate_factorizations(const HilbertElement& n, Int bound) {
    const Split s = split_primes(n, bound);
    std::vector<std::vector<Int>> out;
    for (const Pairing& pairing : enumerate_pairings(s.multiplicity)) {
        std::vector<Int> factors = s.fixed;
        for (const PairUse& use : pairing) {
            const Int atom = checked::mul(s.paired_atoms[use.first], s.paired_atoms[use.second]);
            factors.insert(factors.end(), use.count, atom);
        }
        std::sort(factors.begin(), factors.end());
        out.push_back(std::move(factors));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Int count_factorizations(const HilbertElement& n, Int bound) {
    return count_pairings(split_primes(n, bound).multiplicity);
}

}  // namespace quadfact
