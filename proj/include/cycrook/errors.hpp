#pragma once

#include <stdexcept>
#include <string>

namespace cycrook {

// Malformed input: bad indices, mismatched rings, unparsable data.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

// A precondition of a mathematical operation does not hold (m > n, k out of range, ...).
class ContractViolation : public std::domain_error {
 public:
  explicit ContractViolation(const std::string& what) : std::domain_error(what) {}
};

// Input is well formed but exceeds the configured size guards.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cycrook
