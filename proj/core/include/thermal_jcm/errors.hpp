#pragma once

#include <stdexcept>
#include <string>

namespace tjcm {

// Invalid parameters or arguments outside an operation's domain.
// The CLI maps these to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical guard tripped: truncation too small, series did not
// converge, fit residual too large. The CLI maps these to exit code 2.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tjcm
