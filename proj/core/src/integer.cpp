#include "quadfact/integer.hpp"

#include <algorithm>
#include <ostream>

namespace quadfact {

namespace checked {

void overflow(const char* op) {
    throw capacity_error(std::string("128-bit integer overflow in ") + op);
}

}  // namespace checked

Int gcd(Int x, Int y) {
    x = abs(x);
    y = abs(y);
    while (y != 0) {
        Int r = x % y;
        x = y;
        y = r;
    }
    return x;
}

Int floor_div(Int x, Int y) {
    Int q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
}

Int floor_mod(Int x, Int y) {
    Int r = x % y;
    if (r != 0 && ((r < 0) != (y < 0))) r += y;
    return r;
}

Int isqrt(Int n) {
    if (n < 0) throw domain_error("isqrt of negative integer");
    if (n < 2) return n;
    // Newton iteration from an upper bound.
    Int x = n;
    Int y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

bool is_perfect_square(Int n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int i = 5; i * i <= n; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

std::vector<PrimePower> factor_integer(Int n, Int bound) {
    if (n < 1) throw domain_error("factor_integer requires n >= 1");
    if (n > bound) {
        throw capacity_error("integer " + to_string(n) + " exceeds trial-division bound " +
                             to_string(bound));
    }
    std::vector<PrimePower> out;
    auto strip = [&](Int p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (Int i = 5; i * i <= n; i += 6) {
        strip(i);
        strip(i + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

Int ipow(Int base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r = checked::mul(r, base);
    return r;
}

std::string to_string(Int x) {
    if (x == 0) return "0";
    bool negative = x < 0;
    // Work on the negative side so the minimum value prints correctly.
    std::string digits;
    Int v = negative ? x : -x;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    if (text.empty()) throw parse_error("empty integer");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw parse_error("sign without digits: '" + std::string(text) + "'");
    Int v = 0;
    for (; i < text.size(); ++i) {
        char ch = text[i];
        if (ch < '0' || ch > '9') {
            throw parse_error("invalid digit in integer '" + std::string(text) + "'");
        }
        Int next;
        if (__builtin_mul_overflow(v, Int{10}, &next) ||
            __builtin_add_overflow(next, Int{ch - '0'}, &next)) {
            throw capacity_error("integer literal too large: '" + std::string(text) + "'");
        }
        v = next;
    }
    return negative ? -v : v;
}

std::ostream& operator<<(std::ostream& os, Int x) { return os << to_string(x); }

}  // namespace quadfact
