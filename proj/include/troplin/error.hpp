#pragma once

#include <stdexcept>
#include <string>

namespace troplin {

// A precondition of the mathematics was violated: a cycle, overlapping node
// sets, a size cap, a shape mismatch, an index out of range.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class CapError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed input documents (JSON that does not match a schema, unparsable
// numbers).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace troplin
