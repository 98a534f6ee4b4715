#include "quadfact/text.hpp"

#include <cctype>
#include <ostream>

namespace quadfact {

namespace {

bool is_space(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }
bool is_word(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0; }

// Drops whitespace, rejecting it between two word characters ("1 2").
std::string strip_spaces(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!is_space(text[i])) {
            out.push_back(text[i]);
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_space(text[j])) ++j;
        if (!out.empty() && j < text.size() && is_word(out.back()) && is_word(text[j])) {
            throw parse_error("unexpected whitespace in '" + std::string(text) + "'");
        }
        i = j - 1;
    }
    return out;
}

std::string sqrt_text(Int d) { return "sqrt(" + to_string(d) + ")"; }

Int require_coordinate(Int v, std::string_view text) {
    if (abs(v) > kCoordinateBound) {
        throw capacity_error("coordinate exceeds 2^40 in '" + std::string(text) + "'");
    }
    return v;
}

}  // namespace

std::string to_string(const QuadInt& x) {
    const Int a = x.a();
    const Int b = x.b();
    const std::string root = sqrt_text(x.d());
    if (b == 0) return to_string(a);
    if (a == 0) {
        if (b == 1) return root;
        if (b == -1) return "-" + root;
        return to_string(b) + "*" + root;
    }
    return to_string(a) + (b < 0 ? "-" : "+") + to_string(abs(b)) + "*" + root;
}

std::string to_string(const QuadIdeal& ideal) {
    return "[" + to_string(ideal.a()) + ", " + to_string(ideal.b()) + "+" + to_string(ideal.c()) +
           "*" + sqrt_text(ideal.d()) + "]";
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) { return os << to_string(x); }

std::ostream& operator<<(std::ostream& os, const QuadIdeal& ideal) {
    return os << to_string(ideal);
}

QuadInt parse_element(std::string_view text, Int d) {
    require_valid_ring_parameter(d);
    const std::string s = strip_spaces(text);
    if (s.empty()) throw parse_error("empty element");

    Int a = 0;
    Int b = 0;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& why) -> parse_error {
        return parse_error("cannot parse element '" + std::string(text) + "': " + why);
    };
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw fail("expected '+' or '-' at offset " + std::to_string(pos));
        }
        std::size_t digits_end = pos;
        while (digits_end < s.size() && std::isdigit(static_cast<unsigned char>(s[digits_end]))) {
            ++digits_end;
        }
        const bool has_digits = digits_end > pos;
        Int coefficient = has_digits ? parse_int(s.substr(pos, digits_end - pos)) : 1;
        pos = digits_end;
        if (pos < s.size() && s[pos] == '*') {
            if (!has_digits) throw fail("'*' without a coefficient");
            ++pos;
            if (s.compare(pos, 5, "sqrt(") != 0) throw fail("'*' must be followed by sqrt(d)");
        }
        if (s.compare(pos, 5, "sqrt(") == 0) {
            pos += 5;
            const std::size_t close = s.find(')', pos);
            if (close == std::string::npos) throw fail("unclosed sqrt(");
            const Int radicand = parse_int(s.substr(pos, close - pos));
            if (radicand != d) {
                throw domain_error("element '" + std::string(text) + "' uses sqrt(" +
                                   to_string(radicand) + ") but the ring is d = " + to_string(d));
            }
            pos = close + 1;
            b = checked::add(b, negative ? -coefficient : coefficient);
        } else {
            if (!has_digits) throw fail("expected an integer or sqrt(d)");
            a = checked::add(a, negative ? -coefficient : coefficient);
        }
    }
    return QuadInt(require_coordinate(a, text), require_coordinate(b, text), d);
}

std::vector<QuadInt> parse_generators(std::string_view text, Int d) {
    std::string s = strip_spaces(text);
    if (s.empty()) throw parse_error("empty generator list");
    const char open = s.front();
    if (open == '(' || open == '[') {
        const char close = open == '(' ? ')' : ']';
        if (s.back() != close) throw parse_error("unbalanced generator list '" + s + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<QuadInt> gens;
    std::size_t start = 0;
    int depth = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i < s.size() && s[i] == '(') ++depth;
        if (i < s.size() && s[i] == ')') --depth;
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            gens.push_back(parse_element(std::string_view(s).substr(start, i - start), d));
            start = i + 1;
        }
    }
    return gens;
}

}  // namespace quadfact
