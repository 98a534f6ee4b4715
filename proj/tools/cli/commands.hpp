#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <quadfact/integer.hpp>

#include "report.hpp"

namespace quadfact::cli {

struct Options {
    Int d = -5;
    bool count_only = false;
    bool oracle = false;
    std::optional<Int> bound;
    bool json = false;
};

Report cmd_factor(const std::string& element, const Options& opts);
Report cmd_ideal(const std::string& action, const std::vector<std::string>& ideals,
                 const Options& opts);
Report cmd_prime(const std::string& p, const Options& opts);
Report cmd_hilbert(const std::string& n, const Options& opts);
Report cmd_selftest(const std::string& bound, const Options& opts);

/// Invariant sweep behind `selftest`: one entry per suite with
/// {name, checked, failed}.
nlohmann::json run_selftest(Int bound);

/// Full command line (without the program name). Writes the report to
/// `out`, diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadfact::cli
