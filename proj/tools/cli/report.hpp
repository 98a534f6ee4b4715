#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace quadfact::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kDomainError = 3,
    kCapacityError = 4,
    kOracleMismatch = 5,
};

/// Result of one CLI invocation. `results` holds command-specific fields;
/// see docs/report_schema.md.
struct Report {
    std::string command;
    std::vector<std::string> inputs;
    nlohmann::json results = nlohmann::json::object();
    std::string status = "ok";
    std::string message;
    int exit_code = kOk;

    friend bool operator==(const Report&, const Report&) = default;
};

void to_json(nlohmann::json& j, const Report& report);
void from_json(const nlohmann::json& j, Report& report);

/// Pretty-printed JSON document with sorted keys and a trailing newline.
std::string render_json(const Report& report);

/// Human-readable rendering.
std::string render_text(const Report& report);

}  // namespace quadfact::cli
