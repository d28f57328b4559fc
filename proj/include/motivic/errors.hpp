#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

// Base of every error the engine raises. kind() is the short machine-readable
// tag used by the CLI error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Malformed descriptors or data violating a documented invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& detail) : Error("validation", detail) {}
};

// A realization is not defined on some factor of the input.
class RealizationError : public Error {
public:
    explicit RealizationError(const std::string& detail) : Error("realization", detail) {}
};

// Input text or JSON does not match the expected schema.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& detail) : Error("parse", detail) {}
};

// Exhaustive enumeration would exceed the configured tuple budget.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& detail) : Error("budget", detail) {}
};

} // namespace motivic
