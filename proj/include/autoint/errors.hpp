#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autoint {

/// Integrand domain violation: a pole, log of a non-positive value, and the
/// like. Distinct from std::invalid_argument so callers can separate "bad
/// request" from "function not defined there".
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Expression syntax error carrying a 1-based character offset.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace autoint
