#pragma once

#include <stdexcept>
#include <string>

namespace normcat {

// Thrown when a brute-force enumeration or closure would exceed the
// configured resource bound.
class bound_exceeded : public std::runtime_error {
 public:
  explicit bound_exceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace normcat
