#pragma once

#include <stdexcept>
#include <string>

namespace qg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (table or soft-set file). `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// An operation was asked to run outside its contract (empty subset,
// non-group base, universe mismatch, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Exhaustive enumeration refused because the carrier exceeds the bound.
// Never silently truncates.
struct BoundError : Error {
    using Error::Error;
};

}  // namespace qg
