#ifndef SOFIC_ERRORS_HPP
#define SOFIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sofic {

/// Base class for every error raised by the library.
class SoficError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A matrix of the wrong degree was supplied (e.g. decompose needs degree 1).
class DegreeError : public SoficError {
public:
    using SoficError::SoficError;
};

/// Matrix shapes are not conformable, or a shape constraint is violated.
class ShapeError : public SoficError {
public:
    using SoficError::SoficError;
};

/// An edge partition does not cover, overlaps, or refers to foreign edges.
class PartitionError : public SoficError {
public:
    using SoficError::SoficError;
};

/// Amalgamation legality conditions are violated.
class AmalgamationError : public SoficError {
public:
    using SoficError::SoficError;
};

/// Inputs to the common-amalgamation construction are incompatible.
class LemmaPreconditionError : public SoficError {
public:
    using SoficError::SoficError;
};

/// A move in a move sequence is illegal; records the failing step.
class MoveError : public SoficError {
public:
    MoveError(std::size_t step, const std::string& what)
        : SoficError("move " + std::to_string(step) + ": " + what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// A search was asked to enumerate more candidates than the budget allows.
class BudgetError : public SoficError {
public:
    using SoficError::SoficError;
};

/// A matrix required to be non-degenerate has an all-empty row or column.
class DegeneracyError : public SoficError {
public:
    using SoficError::SoficError;
};

/// A matrix does not have the block form an operation requires.
class FormError : public SoficError {
public:
    using SoficError::SoficError;
};

/// A matrix required to be invertible is singular.
class SingularError : public SoficError {
public:
    using SoficError::SoficError;
};

/// Text input could not be parsed; carries a 1-based line/column position.
class ParseError : public SoficError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : SoficError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace sofic

#endif
