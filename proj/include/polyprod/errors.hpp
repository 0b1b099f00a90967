#pragma once

#include <stdexcept>
#include <string>

namespace polyprod {

// Bad user input (malformed files, out-of-range parameters). CLI exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically well-posed refusal (e.g. a pair that is not homology split).
// CLI exit code 3.
struct MathRefusal : std::runtime_error {
  explicit MathRefusal(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant (d∘d != 0, a chain-map assertion failure, ...).
// Carries reproduction data in the message. CLI exit code 4.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

#define POLYPROD_CHECK(cond, msg)                                       \
  do {                                                                  \
    if (!(cond)) throw ::polyprod::InvariantViolation(std::string(msg)); \
  } while (0)

}  // namespace polyprod
