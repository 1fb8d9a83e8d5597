#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paretogof {

// Argument outside the support of a distribution or formula.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Method-of-moments estimate undefined (sample mean <= 1).
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Minimum-block order m outside [2, n].
class OrderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace paretogof
