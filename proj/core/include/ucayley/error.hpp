#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ucayley {

// Malformed ring-spec text. `position` is the 0-based offset into the input.
class SpecSyntaxError : public std::invalid_argument {
 public:
  SpecSyntaxError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Well-formed spec that violates a constructor constraint (GF(6), T over Z(6), ...).
class SpecConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured size cap (ring order, graph vertices, export size) was exceeded.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Operation applied to an object it is not defined for (det on a non-matrix
// ring, a non-ideal passed to quotient_ring, a dependent seed set, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A search exhausted its node or wall-clock budget before finishing.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ucayley
