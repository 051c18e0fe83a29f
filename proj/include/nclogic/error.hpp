#pragma once

#include <stdexcept>
#include <string>

namespace nclogic {

// malformed source text; offset is a 0-based byte position into the input
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// structurally invalid model, proof or universe data
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an enumeration or construction would exceed the configured budget;
// raise it with --budget or NCLOGIC_BUDGET instead of truncating silently
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nclogic
