#pragma once

#include <stdexcept>
#include <string>

namespace gatesim {

/// Invalid parameters or inconsistent configuration. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// File access failure. CLI exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or invalid input file contents (reported with line numbers).
class ParseError : public ConfigError {
public:
    ParseError(const std::string& what, std::size_t line)
        : ConfigError(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Exhaustive enumeration would exceed the configured budget. CLI exit code 4.
class EnumerationBudgetError : public std::runtime_error {
public:
    EnumerationBudgetError(const std::string& what, double required, double budget)
        : std::runtime_error(what), required_(required), budget_(budget) {}

    double required() const noexcept { return required_; }
    double budget() const noexcept { return budget_; }

private:
    double required_;
    double budget_;
};

/// A broadcast run exceeded the safety round cap. Diagnostic only: the push
/// process always terminates on the complete graph, so hitting this indicates
/// a defect, not a valid outcome.
class RunawayError : public std::runtime_error {
public:
    explicit RunawayError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gatesim
