#pragma once

#include <stdexcept>
#include <string>

namespace branchcalc {

/// A precondition of a mathematical operation was violated
/// (over-truncation, unlinked pair passed to union_intersection, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent JSON input.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The computation needs q (or another parameter) specialized to a rational.
class SpecializationRequired : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace branchcalc
