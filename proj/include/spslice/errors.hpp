#ifndef SPSLICE_ERRORS_HPP
#define SPSLICE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spslice {

/// Division by zero or another undefined field operation.
class ArithmeticError : public std::domain_error {
public:
    explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// Caller violated a precondition (mismatched variable sets, dimensions, shapes).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well-formed but outside the mathematical domain of the operation
/// (non-nilpotent matrix handed to jordan_type, off-variety slice point, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Text could not be parsed.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace spslice

#endif
