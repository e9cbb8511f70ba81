#pragma once

#include <stdexcept>
#include <string>

namespace carlgoss {

// Violated operation precondition or unusable configuration. The CLI maps
// this to exit code 2.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A guard assertion failed: a computed object does not satisfy the bound the
// algorithm relies on (degree window, exact division). Results downstream of
// a guard failure cannot be trusted. The CLI maps this to exit code 3.
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace carlgoss
