#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zeon {

/// Operands of a binary operation live in different algebra contexts.
class ContextError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A documented precondition of an operation was not met by the caller.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input text could not be turned into a hypergraph.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A size or term-count budget would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algebraic identity that must hold by construction did not.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace zeon
