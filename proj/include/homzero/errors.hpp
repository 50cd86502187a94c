#pragma once

#include <stdexcept>
#include <string>

namespace homzero {

// Malformed or structurally invalid input (bad table, bad matrix shape, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition of a construction does not hold for the input.
class HypothesisFailure : public std::runtime_error {
 public:
  HypothesisFailure(std::string hypothesis, const std::string& detail)
      : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

// A bounded search ran out of budget before reaching a certain answer.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homzero
