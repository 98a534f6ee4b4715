#include <doctest.h>

#include <sstream>

#include "cli/commands.hpp"

using namespace quadfact;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json-style");
    const Run r = invoke(args);
    REQUIRE(r.code == expected_code);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("factor") {
    const json six = invoke_json({"factor", "6"});
    CHECK(six["status"] == "ok");
    CHECK(six["results"]["count"] == 2);
    CHECK(six["results"]["length"] == 2);
    CHECK(six["results"]["certificate"]["kind"] == "Reducible");
    const json expected = json::array(
        {{{"unit", 1}, {"factors", {"2", "3"}}},
         {{"unit", 1}, {"factors", {"1-1*sqrt(-5)", "1+1*sqrt(-5)"}}}});
    CHECK(six["results"]["factorizations"] == expected);

    const json big = invoke_json({"factor", "1980", "--count-only"});
    CHECK(big["results"]["count"] == 6);
    CHECK(big["results"]["length"] == 7);
    CHECK_FALSE(big["results"].contains("factorizations"));

    const json eleven = invoke_json({"factor", "11", "--oracle"});
    CHECK(eleven["results"]["certificate"]["kind"] == "PrimeElement");
    CHECK(eleven["results"]["factorizations"].size() == 1);
    CHECK(eleven["results"]["oracle"]["agree"] == true);

    const json with_oracle = invoke_json({"--oracle", "factor", "1980"});
    CHECK(with_oracle["results"]["oracle"]["count"] == 6);
}

TEST_CASE("ideal") {
    const json mul = invoke_json({"ideal", "mul", "(2,1+1*sqrt(-5))", "(2,1+1*sqrt(-5))"});
    CHECK(mul["results"]["product"] == "[2, 0+2*sqrt(-5)]");

    const json cls = invoke_json({"ideal", "class", "(2,1+1*sqrt(-5))"});
    CHECK(cls["results"]["class"] == "NonPrincipal");

    const json inv = invoke_json({"ideal", "inverse", "(3,1+2*sqrt(-5))"});
    CHECK(inv["results"]["partner"] == "[3, 1+1*sqrt(-5)]");
    CHECK(inv["results"]["scale"] == 3);
    CHECK(inv["results"]["product"] == "[3, 0+3*sqrt(-5)]");

    const json div = invoke_json({"ideal", "divide", "(2)", "(2, 1+sqrt(-5))"});
    CHECK(div["results"]["quotient"] == "[2, 1+1*sqrt(-5)]");

    const json fac = invoke_json({"ideal", "factor", "(6)"});
    CHECK(fac["results"]["prime_factorization"].size() == 3);

    const json nrm = invoke_json({"ideal", "norm", "(7, 3+sqrt(2))", "--d", "2"});
    CHECK(nrm["results"]["norm"] == 7);
}

TEST_CASE("prime, hilbert and selftest") {
    CHECK(invoke_json({"prime", "13"})["results"]["split_type"] == "Inert");
    CHECK(invoke_json({"prime", "3"})["results"]["sqrt_minus_five_mod_p"] == 1);
    const json h = invoke_json({"hilbert", "441"});
    CHECK(h["results"]["count"] == 2);
    CHECK(h["results"]["factorizations"] == json::parse("[[9,49],[21,21]]"));
    const json st = invoke_json({"selftest", "2000"});
    CHECK(st["results"]["passed"] == true);
    for (const auto& suite : st["results"]["suites"]) {
        CHECK(suite["failed"] == 0);
        CHECK(suite["checked"].get<long>() > 0);
    }
}

TEST_CASE("exit codes") {
    CHECK(invoke({"factor", "1+"}).code == cli::kParseError);
    CHECK(invoke({"factor"}).code == cli::kParseError);
    CHECK(invoke({"frobnicate"}).code == cli::kParseError);
    CHECK(invoke({"ideal", "twist", "(2)"}).code == cli::kParseError);
    CHECK(invoke({"ideal", "mul", "(2)"}).code == cli::kParseError);
    CHECK(invoke({"factor", "1"}).code == cli::kDomainError);
    CHECK(invoke({"factor", "0"}).code == cli::kDomainError);
    CHECK(invoke({"ideal", "norm", "(0, 0)"}).code == cli::kDomainError);
    CHECK(invoke({"ideal", "divide", "(3)", "(2, 1+sqrt(-5))"}).code == cli::kDomainError);
    CHECK(invoke({"ideal", "class", "(7, 3+sqrt(2))", "--d", "2"}).code == cli::kDomainError);
    CHECK(invoke({"prime", "15"}).code == cli::kDomainError);
    CHECK(invoke({"hilbert", "3"}).code == cli::kDomainError);
    CHECK(invoke({"factor", "6", "--d", "5"}).code == cli::kDomainError);
    CHECK(invoke({"factor", "100000", "--bound", "1000"}).code == cli::kCapacityError);
    CHECK(invoke({"factor", "1000", "--oracle", "--bound", "100000"}).code == cli::kCapacityError);
    CHECK(invoke({"factor", "99999999999999"}).code == cli::kCapacityError);

    const json err = invoke_json({"factor", "1"}, cli::kDomainError);
    CHECK(err["status"] == "domain_error");
    CHECK(err["exit_code"] == cli::kDomainError);
    CHECK_FALSE(err["message"].get<std::string>().empty());
}

TEST_CASE("negative element arguments") {
    const Run r = invoke({"factor", "--json-style", "--", "-6"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["results"]["element"] == "-6");
    CHECK(j["results"]["factorizations"][0]["unit"] == -1);
}

TEST_CASE("structured output is deterministic and round-trips") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"factor", "1980", "--json-style"},
             {"ideal", "factor", "(1980)", "--json-style"},
             {"hilbert", "611325", "--json-style"},
             {"factor", "1", "--json-style"}}) {
        const Run first = invoke(args);
        const Run second = invoke(args);
        CHECK(first.out == second.out);
        const cli::Report report = json::parse(first.out).get<cli::Report>();
        CHECK(cli::render_json(report) == first.out);
        CHECK(json(report).get<cli::Report>() == report);
    }
}

TEST_CASE("text output") {
    const Run r = invoke({"factor", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("factors: [2, 3]") != std::string::npos);
    CHECK(r.out.find("factors: [1-1*sqrt(-5), 1+1*sqrt(-5)]") != std::string::npos);
    CHECK(r.out.find("status: ok") != std::string::npos);
}
