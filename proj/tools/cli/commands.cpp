#include "commands.hpp"

#include <limits>
#include <ostream>

#include <CLI11.hpp>
#include <quadfact/quadfact.hpp>

namespace quadfact::cli {

namespace {

nlohmann::json json_int(Int v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return to_string(v);
}

nlohmann::json json_prime_factorization(const PrimeFactorization& pf) {
    nlohmann::json out = nlohmann::json::array();
    for (const PrimeFactor& f : pf.factors) {
        out.push_back({{"ideal", to_string(f.prime)},
                       {"norm", json_int(norm(f.prime))},
                       {"exponent", f.exponent},
                       {"class", std::string(to_string(f.ideal_class))}});
    }
    return out;
}

nlohmann::json json_factorization(const Factorization& f) {
    nlohmann::json factors = nlohmann::json::array();
    for (const QuadInt& x : f.factors) factors.push_back(to_string(x));
    return {{"unit", f.unit}, {"factors", factors}};
}

nlohmann::json json_certificate(const IrreducibilityCertificate& cert) {
    struct Visitor {
        nlohmann::json operator()(const ZeroElement&) const { return {{"kind", "Zero"}}; }
        nlohmann::json operator()(const UnitElement&) const { return {{"kind", "Unit"}}; }
        nlohmann::json operator()(const PrimeElement& c) const {
            return {{"kind", "PrimeElement"}, {"ideals", {to_string(c.prime)}}};
        }
        nlohmann::json operator()(const TwoNonprincipal& c) const {
            return {{"kind", "TwoNonprincipal"},
                    {"ideals", {to_string(c.first), to_string(c.second)}}};
        }
        nlohmann::json operator()(const Reducible& c) const {
            return {{"kind", "Reducible"}, {"witness", {to_string(c.left), to_string(c.right)}}};
        }
    };
    return std::visit(Visitor{}, cert);
}

QuadIdeal parse_ideal(const std::string& text, Int d) {
    auto ideal = ideal_from_generators(parse_generators(text, d));
    if (!ideal) throw domain_error("'" + text + "' generates the zero ideal");
    return *ideal;
}

void require_ring_minus_five(const Options& opts, const char* command) {
    if (opts.d != kMinusFive) {
        throw domain_error(std::string(command) + " is only defined for d = -5");
    }
}

}  // namespace

Report cmd_factor(const std::string& element, const Options& opts) {
    require_ring_minus_five(opts, "factor");
    Report report{"factor", {element}};
    const QuadInt x = parse_element(element, opts.d);
    if (x.is_zero() || is_unit(x)) {
        throw domain_error("factor requires a nonzero nonunit, got " + to_string(x));
    }
    const Int bound = opts.bound.value_or(kDefaultFactorBound);
    const PrimeFactorization pf = factor_ideal(principal_ideal(x), bound);
    const auto factorizations = enumerate_factorizations(x, bound);

    auto& res = report.results;
    res["element"] = to_string(x);
    res["norm"] = json_int(norm(x));
    res["certificate"] = json_certificate(certify_irreducibility(x, bound));
    res["prime_factorization"] = json_prime_factorization(pf);
    res["length"] = factorization_length(x, bound);
    res["count"] = json_int(count_factorizations(x, bound));
    if (!opts.count_only) {
        nlohmann::json list = nlohmann::json::array();
        for (const Factorization& f : factorizations) list.push_back(json_factorization(f));
        res["factorizations"] = list;
    }
    if (opts.oracle) {
        const auto brute = brute_force_factorizations(x, opts.bound.value_or(kDefaultOracleBound));
        const bool agree = brute == factorizations;
        res["oracle"] = {{"count", brute.size()}, {"agree", agree}};
        if (!agree) {
            report.status = "oracle_mismatch";
            report.exit_code = kOracleMismatch;
        }
    }
    return report;
}

Report cmd_ideal(const std::string& action, const std::vector<std::string>& ideals,
                 const Options& opts) {
    Report report{"ideal " + action, ideals};
    const bool binary = action == "mul" || action == "divide";
    const bool unary = action == "norm" || action == "class" || action == "factor" ||
                       action == "inverse";
    if (!binary && !unary) throw parse_error("unknown ideal action '" + action + "'");
    if (ideals.size() != (binary ? 2u : 1u)) {
        throw parse_error("ideal " + action + " expects " + (binary ? "two ideals" : "one ideal"));
    }
    if (action != "norm" && action != "mul") require_ring_minus_five(opts, "ideal arithmetic");

    std::vector<QuadIdeal> parsed;
    nlohmann::json canonical = nlohmann::json::array();
    for (const auto& text : ideals) {
        parsed.push_back(parse_ideal(text, opts.d));
        canonical.push_back(to_string(parsed.back()));
    }
    auto& res = report.results;
    res["ideals"] = canonical;
    const QuadIdeal& first = parsed.front();

    if (action == "norm") {
        res["norm"] = json_int(norm(first));
    } else if (action == "mul") {
        const QuadIdeal product = first * parsed[1];
        res["product"] = to_string(product);
        res["norm"] = json_int(norm(product));
    } else if (action == "divide") {
        auto quotient = divide(first, parsed[1]);
        if (!quotient) {
            throw domain_error(to_string(first) + " is not divisible by " + to_string(parsed[1]));
        }
        res["quotient"] = to_string(*quotient);
        res["norm"] = json_int(norm(*quotient));
    } else if (action == "class") {
        auto gen = principal_generator(first);
        res["class"] = gen ? "Principal" : "NonPrincipal";
        if (gen) res["generator"] = to_string(*gen);
    } else if (action == "factor") {
        if (norm(first) == 1) {
            res["prime_factorization"] = nlohmann::json::array();
        } else {
            res["prime_factorization"] = json_prime_factorization(
                factor_ideal(first, opts.bound.value_or(kDefaultFactorBound)));
        }
    } else {
        const InversePair inv = inverse_pair(first);
        res["partner"] = to_string(inv.partner);
        res["scale"] = json_int(inv.scale);
        res["product"] = to_string(first * inv.partner);
    }
    return report;
}

Report cmd_prime(const std::string& p_text, const Options& opts) {
    require_ring_minus_five(opts, "prime");
    Report report{"prime", {p_text}};
    const Int p = parse_int(p_text);
    const SplitType type = classify_prime(p);
    auto& res = report.results;
    res["p"] = json_int(p);
    res["split_type"] = std::string(to_string(type));
    if (p != 2 && p != 5) {
        auto root = sqrt_minus_five_mod(p);
        res["sqrt_minus_five_mod_p"] = root ? json_int(*root) : nlohmann::json(nullptr);
    }
    res["prime_factorization"] = json_prime_factorization(factor_rational_prime(p));
    return report;
}

Report cmd_hilbert(const std::string& n_text, const Options& opts) {
    Report report{"hilbert", {n_text}};
    const HilbertElement n(parse_int(n_text));
    const Int bound = opts.bound.value_or(kDefaultFactorBound);
    const auto factorizations = enumerate_factorizations(n, bound);
    auto& res = report.results;
    res["n"] = json_int(n.value());
    res["irreducible"] = is_irreducible(n, bound);
    res["count"] = json_int(count_factorizations(n, bound));
    res["length"] = factorizations.empty() ? 0 : factorizations.front().size();
    if (!opts.count_only) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& f : factorizations) {
            nlohmann::json factors = nlohmann::json::array();
            for (Int v : f) factors.push_back(json_int(v));
            list.push_back(factors);
        }
        res["factorizations"] = list;
    }
    return report;
}

Report cmd_selftest(const std::string& bound_text, const Options&) {
    Report report{"selftest", {bound_text}};
    const Int bound = parse_int(bound_text);
    if (bound < 2) throw domain_error("selftest bound must be at least 2");
    if (bound > kDefaultOracleBound) {
        throw capacity_error("selftest bound exceeds the oracle bound " +
                             to_string(kDefaultOracleBound));
    }
    nlohmann::json suites = run_selftest(bound);
    bool passed = true;
    for (const auto& suite : suites) passed = passed && suite.at("failed").get<long>() == 0;
    report.results["suites"] = suites;
    report.results["passed"] = passed;
    if (!passed) {
        report.status = "invariant_failure";
        report.exit_code = kOracleMismatch;
    }
    return report;
}

namespace {

template <class Fn>
Report guarded(const std::string& command, const std::vector<std::string>& inputs, Fn&& fn) {
    auto failure = [&](const char* status, int code, const std::string& message) {
        Report r{command, inputs};
        r.status = status;
        r.exit_code = code;
        r.message = message;
        return r;
    };
    try {
        return fn();
    } catch (const parse_error& e) {
        return failure("parse_error", kParseError, e.what());
    } catch (const domain_error& e) {
        return failure("domain_error", kDomainError, e.what());
    } catch (const capacity_error& e) {
        return failure("capacity_error", kCapacityError, e.what());
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization of elements and ideals in Z[sqrt(-5)]", "quadfact"};
    app.require_subcommand(1);

    Options opts;
    std::string d_text = "-5";
    std::string bound_text;
    app.add_option("--d", d_text, "Ring parameter d (lattice-only ideal commands)");
    app.add_flag("--count-only", opts.count_only, "Omit the factorization lists");
    app.add_flag("--oracle", opts.oracle, "Cross-check against the brute-force oracle");
    app.add_option("--bound", bound_text, "Norm bound for factoring and the oracle");
    app.add_flag("--json-style", opts.json, "Emit one JSON document");

    std::string element;
    auto* factor = app.add_subcommand("factor", "Factor an element into irreducibles");
    factor->add_option("element", element, "Element, e.g. \"1+2*sqrt(-5)\"")->required();

    std::string action;
    std::vector<std::string> ideals;
    auto* ideal = app.add_subcommand("ideal", "Ideal arithmetic");
    ideal->add_option("action", action, "norm|mul|divide|class|factor|inverse")->required();
    ideal->add_option("ideals", ideals, "Generator lists, e.g. \"(2, 1+1*sqrt(-5))\"")
        ->required();

    std::string prime_text;
    auto* prime = app.add_subcommand("prime", "Decomposition of a rational prime");
    prime->add_option("p", prime_text)->required();

    std::string hilbert_text;
    auto* hilbert = app.add_subcommand("hilbert", "Factorizations in the Hilbert monoid");
    hilbert->add_option("n", hilbert_text)->required();

    std::string selftest_text;
    auto* selftest = app.add_subcommand("selftest", "Sweep all invariant suites");
    selftest->add_option("bound", selftest_text)->required();

    for (auto* sub : {factor, ideal, prime, hilbert, selftest}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    Report report = guarded("options", args, [&] {
        opts.d = parse_int(d_text);
        require_valid_ring_parameter(opts.d);
        if (!bound_text.empty()) {
            opts.bound = parse_int(bound_text);
            if (*opts.bound < 1) throw domain_error("--bound must be positive");
        }
        return Report{};
    });
    if (report.exit_code == kOk) {
        if (*factor) {
            report = guarded("factor", {element}, [&] { return cmd_factor(element, opts); });
        } else if (*ideal) {
            report = guarded("ideal " + action, ideals,
                             [&] { return cmd_ideal(action, ideals, opts); });
        } else if (*prime) {
            report = guarded("prime", {prime_text}, [&] { return cmd_prime(prime_text, opts); });
        } else if (*hilbert) {
            report = guarded("hilbert", {hilbert_text},
                             [&] { return cmd_hilbert(hilbert_text, opts); });
        } else {
            report = guarded("selftest", {selftest_text},
                             [&] { return cmd_selftest(selftest_text, opts); });
        }
    }

    if (opts.json) {
        out << render_json(report);
    } else {
        out << render_text(report);
        if (report.exit_code != kOk && !report.message.empty()) {
            err << "error: " << report.message << "\n";
        }
    }
    return report.exit_code;
}

}  // namespace quadfact::cli
