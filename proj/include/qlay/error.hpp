#pragma once

#include <stdexcept>
#include <string>

namespace qlay {

/// Classifies every failure the library can raise; the CLI maps kinds to exit codes.
enum class ErrorKind {
  MalformedRealizer,  // realizer lists are not permutations of one element set
  NotAPoset,          // relation list contains a cycle
  EmptyInput,         // empty element universe
  MalformedOrder,     // order is not a permutation of the elements
  Precondition,       // order violates a poset relation
  Parameter,          // out-of-range construction parameter
  DuplicateElement,   // sequence concatenation with overlapping elements
  Arity,              // interleaving sequences of different lengths
  Input,              // malformed runtime input (chain partition, rainbow, ...)
  Size,               // instance exceeds a hard size limit
  ResourceLimit,      // search exceeded its configured budget
  InvalidModel,       // truth assignment does not satisfy the formula
  Internal,           // decoded artifact failed re-validation (encoder bug)
  Parse,              // document syntax or schema violation
  Usage,              // bad command line
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedRealizer: return "malformed-realizer";
    case ErrorKind::NotAPoset: return "not-a-poset";
    case ErrorKind::EmptyInput: return "empty-input";
    case ErrorKind::MalformedOrder: return "malformed-order";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Parameter: return "parameter";
    case ErrorKind::DuplicateElement: return "duplicate-element";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::Input: return "input";
    case ErrorKind::Size: return "size";
    case ErrorKind::ResourceLimit: return "resource-limit";
    case ErrorKind::InvalidModel: return "invalid-model";
    case ErrorKind::Internal: return "internal";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace qlay
