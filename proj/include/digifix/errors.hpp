#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace digifix {

// Malformed input: bad JSON, dimension mismatch, index out of range, bad flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive engine was asked to run beyond its configured size cap.
class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

// One or more hypotheses of a fixed-point procedure do not hold for the given inputs.
class PremiseViolation : public std::runtime_error {
 public:
  explicit PremiseViolation(std::vector<std::string> violated);

  const std::vector<std::string>& violated() const { return violated_; }

 private:
  std::vector<std::string> violated_;
};

}  // namespace digifix
