#pragma once

#include <deque>
#include <string>
#include <utility>
#include <vector>

namespace qg {

// Deterministic, ordered report: same input, same bytes. Sections live in a
// deque so references returned by add_section stay valid while later
// sections are appended.
struct Report {
    enum class Status { pass, fail, invalid_input };

    struct Section {
        std::string title;
        std::vector<std::pair<std::string, std::string>> entries;
    };

    Status status = Status::pass;
    std::deque<Section> sections;
    std::vector<std::string> counterexamples;

    Section& add_section(std::string title);
    void add(Section& section, std::string key, std::string value);
    void counterexample(std::string text);
};

std::string to_string(Report::Status status);

// Line-oriented:
//   STATUS <status>
//   SECTION <title>
//   <key> = <value>
//   COUNTEREXAMPLE <text>
std::string emit_text(const Report& report);

// Same content as a JSON object with stable key order.
std::string emit_json(const Report& report);

}  // namespace qg
