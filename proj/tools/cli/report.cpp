#include "report.hpp"

#include <sstream>

namespace quadfact::cli {

void to_json(nlohmann::json& j, const Report& report) {
    j = nlohmann::json{{"command", report.command},
                       {"inputs", report.inputs},
                       {"results", report.results},
                       {"status", report.status},
                       {"exit_code", report.exit_code}};
    if (!report.message.empty()) j["message"] = report.message;
}

void from_json(const nlohmann::json& j, Report& report) {
    j.at("command").get_to(report.command);
    j.at("inputs").get_to(report.inputs);
    report.results = j.at("results");
    j.at("status").get_to(report.status);
    j.at("exit_code").get_to(report.exit_code);
    report.message = j.value("message", std::string{});
}

std::string render_json(const Report& report) {
    return nlohmann::json(report).dump(2) + "\n";
}

namespace {

void render_value(std::ostringstream& os, const nlohmann::json& value, int indent);

std::string scalar(const nlohmann::json& value) {
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

bool is_flat_array(const nlohmann::json& value) {
    if (!value.is_array()) return false;
    for (const auto& item : value) {
        if (item.is_structured()) return false;
    }
    return true;
}

std::string flat_array(const nlohmann::json& value) {
    std::string out = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (i) out += ", ";
        out += scalar(value[i]);
    }
    return out + "]";
}

void render_field(std::ostringstream& os, const std::string& key, const nlohmann::json& value,
                  int indent) {
    os << std::string(indent, ' ') << key << ":";
    if (!value.is_structured()) {
        os << " " << scalar(value) << "\n";
    } else if (is_flat_array(value)) {
        os << " " << flat_array(value) << "\n";
    } else {
        os << "\n";
        render_value(os, value, indent + 2);
    }
}

void render_value(std::ostringstream& os, const nlohmann::json& value, int indent) {
    if (value.is_object()) {
        for (const auto& [key, item] : value.items()) render_field(os, key, item, indent);
    } else if (value.is_array()) {
        for (const auto& item : value) {
            if (item.is_object()) {
                os << std::string(indent, ' ') << "-\n";
                render_value(os, item, indent + 2);
            } else if (is_flat_array(item)) {
                os << std::string(indent, ' ') << "- " << flat_array(item) << "\n";
            } else {
                os << std::string(indent, ' ') << "- " << scalar(item) << "\n";
            }
        }
    } else {
        os << std::string(indent, ' ') << scalar(value) << "\n";
    }
}

}  // namespace

std::string render_text(const Report& report) {
    std::ostringstream os;
    os << report.command;
    for (const auto& input : report.inputs) os << " " << input;
    os << "\n";
    render_value(os, report.results, 2);
    os << "status: " << report.status;
    if (!report.message.empty()) os << " (" << report.message << ")";
    os << "\n";
    return os.str();
}

}  // namespace quadfact::cli
