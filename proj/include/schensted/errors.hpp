#pragma once

#include <stdexcept>
#include <string>

namespace schensted {

/// Violation of an operation's precondition (square not removable, entry
/// already present, target shape not covered, ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace schensted
