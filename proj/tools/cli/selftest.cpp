#include <algorithm>
#include <random>

#include <quadfact/quadfact.hpp>

#include "commands.hpp"

namespace quadfact::cli {

namespace {

class Suite {
public:
    explicit Suite(std::string name) : name_(std::move(name)) {}

    void check(bool ok) {
        ++checked_;
        if (!ok) ++failed_;
    }

    // Runs `body`, counting a thrown library error as a failure.
    template <class Fn>
    void check_guarded(Fn&& body) {
        try {
            check(body());
        } catch (const error&) {
            check(false);
        }
    }

    nlohmann::json summary() const {
        return {{"name", name_}, {"checked", checked_}, {"failed", failed_}};
    }

private:
    std::string name_;
    long checked_ = 0;
    long failed_ = 0;
};

QuadInt random_element(std::mt19937_64& rng, int radius) {
    std::uniform_int_distribution<int> coord(-radius, radius);
    return QuadInt(coord(rng), coord(rng), kMinusFive);
}

QuadIdeal random_ideal(std::mt19937_64& rng, int radius) {
    for (;;) {
        std::array<QuadInt, 2> gens{random_element(rng, radius), random_element(rng, radius)};
        if (auto ideal = ideal_from_generators(gens)) return *ideal;
    }
}

// Canonical associates x with 1 < N(x) <= bound.
std::vector<QuadInt> canonical_elements(Int bound) {
    std::vector<QuadInt> out;
    const Int b_max = isqrt(bound / 5);
    for (Int a = 0; a * a <= bound; ++a) {
        for (Int b = -b_max; b <= b_max; ++b) {
            QuadInt x(a, b, kMinusFive);
            const Int n = norm(x);
            if (n > 1 && n <= bound && is_canonical_associate(x)) out.push_back(x);
        }
    }
    return out;
}

}  // namespace

nlohmann::json run_selftest(Int bound) {
    std::mt19937_64 rng(0x51ab1e);
    nlohmann::json suites = nlohmann::json::array();

    Suite elements("element_norm_and_conjugation");
    for (int i = 0; i < 1000; ++i) {
        const QuadInt x = random_element(rng, 50);
        const QuadInt y = random_element(rng, 50);
        elements.check(norm(x * y) == norm(x) * norm(y));
        elements.check(conjugate(x * y) == conjugate(x) * conjugate(y));
        elements.check(conjugate(x + y) == conjugate(x) + conjugate(y));
        const QuadInt xx = x * conjugate(x);
        elements.check(xx.b() == 0 && xx.a() == norm(x));
        elements.check((norm(x) == 0) == x.is_zero());
    }
    suites.push_back(elements.summary());

    Suite ideals("ideal_norm_laws");
    for (int i = 0; i < 300; ++i) {
        const QuadIdeal I = random_ideal(rng, 20);
        const QuadIdeal J = random_ideal(rng, 20);
        ideals.check(norm(I * J) == norm(I) * norm(J));
        QuadInt x = random_element(rng, 50);
        if (!x.is_zero()) ideals.check(norm(principal_ideal(x)) == norm(x));
        const InversePair inv = inverse_pair(I);
        ideals.check(I * inv.partner == principal_ideal(QuadInt::rational(inv.scale, kMinusFive)));
        ideals.check(inv.scale == norm(I));
        ideals.check(divide(I * J, J) == I);
    }
    suites.push_back(ideals.summary());

    Suite classes("class_group");
    for (int i = 0; i < 200; ++i) {
        const QuadIdeal I = random_ideal(rng, 12);
        const QuadIdeal J = random_ideal(rng, 12);
        classes.check(ideal_class(I * J) == ideal_class(I) * ideal_class(J));
    }
    suites.push_back(classes.summary());

    Suite splitting("splitting_law");
    for (Int p = 2; p <= std::min<Int>(bound, 10'000); ++p) {
        if (!is_prime(p)) continue;
        splitting.check_guarded([&] {
            const SplitType type = classify_prime(p);
            const PrimeFactorization pf = factor_rational_prime(p);
            bool ok = pf.product() == principal_ideal(QuadInt::rational(p, kMinusFive));
            for (const PrimeFactor& f : pf.factors) ok = ok && is_prime_ideal(f.prime);
            if (p != 2 && p != 5) {
                ok = ok && (type == SplitType::Split) == sqrt_minus_five_mod(p).has_value();
            }
            return ok;
        });
    }
    suites.push_back(splitting.summary());

    Suite oracle("factorization_oracle");
    for (const QuadInt& x : canonical_elements(bound)) {
        oracle.check_guarded([&] {
            const auto via_ideals = enumerate_factorizations(x);
            const auto brute = brute_force_factorizations(x);
            const int length = factorization_length(x);
            bool ok = via_ideals == brute;
            ok = ok && count_factorizations(x) == static_cast<Int>(via_ideals.size());
            for (const auto& f : brute) {
                ok = ok && static_cast<int>(f.length()) == length && f.product() == x;
            }
            return ok;
        });
    }
    suites.push_back(oracle.summary());

    Suite hilbert("hilbert_half_factorial");
    for (Int n = 5; n <= bound; n += 4) {
        hilbert.check_guarded([&] {
            const HilbertElement h(n);
            const auto list = enumerate_factorizations(h);
            bool ok = !list.empty() && count_factorizations(h) == static_cast<Int>(list.size());
            for (const auto& f : list) ok = ok && f.size() == list.front().size();
            return ok;
        });
    }
    suites.push_back(hilbert.summary());

    Suite eta("eta_x3_formula");
    for (int x3 = 0; x3 <= 12; ++x3) {
        for (int x2 = 0; x2 <= x3; ++x2) {
            for (int x1 = 0; x1 <= x2; ++x1) {
                if ((x1 + x2 + x3) % 2 != 0) continue;
                const std::array<int, 3> m{x1, x2, x3};
                eta.check(eta_x3(x1, x2, x3, (x1 + x2 + x3) / 2) == count_pairings(m));
            }
        }
    }
    suites.push_back(eta.summary());

    return suites;
}

}  // namespace quadfact::cli
