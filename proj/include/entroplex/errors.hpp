#ifndef ENTROPLEX_ERRORS_HPP
#define ENTROPLEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entroplex {

/// Precondition violations: unknown variables, universe mismatches, bad weights.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap (universe size, multiplicity total, enumeration) was hit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is not in the syntactic form an operation requires.
class FormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The requested semantics has no decision procedure here.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace entroplex

#endif
