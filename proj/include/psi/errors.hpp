#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psi {

// Malformed polynomial, permutation, or ideal-spec text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Operands live in rings with different numbers of variables, or an
// operation is restricted to a particular variable count.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates an operation's precondition (zero polynomial,
// inhomogeneous generator, mixed degrees, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumerating S_d would exceed the configured variable cap.
class GroupCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A theorem-backed operation was asked to run over a field whose
// characteristic the theorem excludes.
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace psi
