#pragma once

#include <stdexcept>
#include <string>

namespace logburn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown or conflicting atom declarations.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Mixing integer and dyadic coefficient domains, or halving an integer element.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by an argument (empty face, non-homogeneous input, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant of a complex, model or presentation does not hold.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The boundary of an atom was required but is not known.
class UnknownBoundaryError : public Error {
 public:
  explicit UnknownBoundaryError(const std::string& atom)
      : Error("unknown boundary for atom '" + atom + "'"), atom_(atom) {}
  const std::string& atom() const noexcept { return atom_; }

 private:
  std::string atom_;
};

/// A face label cannot be turned into a boundary expansion.
class UnsupportedLabelError : public Error {
 public:
  using Error::Error;
};

/// Missing stratum data in a degeneration model.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// The twist exponent of a model is not an integer.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Well-formed JSON that does not match the document schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace logburn
