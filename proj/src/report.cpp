#include "qg/report.hpp"

#include <json.hpp>

namespace qg {

Report::Section& Report::add_section(std::string title) {
    sections.push_back(Section{std::move(title), {}});
    return sections.back();
}

void Report::add(Section& section, std::string key, std::string value) {
    section.entries.emplace_back(std::move(key), std::move(value));
}

void Report::counterexample(std::string text) { counterexamples.push_back(std::move(text)); }

std::string to_string(Report::Status status) {
    switch (status) {
        case Report::Status::pass: return "pass";
        case Report::Status::fail: return "fail";
        case Report::Status::invalid_input: return "invalid-input";
    }
    return "?";
}

std::string emit_text(const Report& report) {
    std::string out = "STATUS " + to_string(report.status) + "\n";
    for (const auto& section : report.sections) {
        out += "SECTION " + section.title + "\n";
        for (const auto& [key, value] : section.entries) out += key + " = " + value + "\n";
    }
    for (const auto& ce : report.counterexamples) out += "COUNTEREXAMPLE " + ce + "\n";
    return out;
}

std::string emit_json(const Report& report) {
    nlohmann::ordered_json j;
    j["status"] = to_string(report.status);
    j["sections"] = nlohmann::ordered_json::array();
    for (const auto& section : report.sections) {
        nlohmann::ordered_json s;
        s["title"] = section.title;
        s["entries"] = nlohmann::ordered_json::object();
        for (const auto& [key, value] : section.entries) s["entries"][key] = value;
        j["sections"].push_back(std::move(s));
    }
    j["counterexamples"] = report.counterexamples;
    return j.dump(2) + "\n";
}

}  // namespace qg
