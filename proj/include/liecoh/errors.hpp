#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace liecoh {

// Base of every error raised by the library. The CLI maps the three
// families below onto exit codes 1, 2 and 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- input errors (exit code 1) ---------------------------------------------

class InputError : public Error {
 public:
  using Error::Error;
};

// Syntax or schema violation in textual input. `location` is a JSON pointer
// or a short description of where the problem was found.
class ParseError : public InputError {
 public:
  ParseError(std::string location, const std::string& what)
      : InputError(location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// Structure-constant table with wrong shape, out-of-range or duplicate indices.
class StructureError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidArgument : public InputError {
 public:
  using InputError::InputError;
};

// --- computation-domain errors (exit code 2) --------------------------------

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonClosedForm : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotSolvable : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotRationallyTriangularizable : public DomainError {
 public:
  using DomainError::DomainError;
};

class SingularMatrix : public DomainError {
 public:
  using DomainError::DomainError;
};

// --- I/O errors (exit code 3) -----------------------------------------------

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace liecoh
