#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zq {

// Violated precondition or malformed/non-simple input.
struct ContractViolation : std::invalid_argument {
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (memo size, exhaustive-search limit, ...) was exceeded.
// Raised instead of ever returning a possibly wrong value.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed serialized graph; `offset` is the byte where parsing failed.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t at)
        : std::runtime_error(what + " (byte " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

}  // namespace zq
