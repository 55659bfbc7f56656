#pragma once

#include <stdexcept>
#include <string>

namespace corfield {

// Bad inputs: out-of-range pixels, malformed files, violated preconditions.
// The CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two rays too close to parallel for a stable closest-point solve.
class DegenerateGeometry : public DomainError {
 public:
  DegenerateGeometry(const std::string& msg, double abs_dot)
      : DomainError(msg), abs_dot_(abs_dot) {}
  double abs_dot() const { return abs_dot_; }

 private:
  double abs_dot_;
};

// Broken internal invariants (non-finite losses, contract violations).
// The CLI maps these to exit code 1.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace corfield
