#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flipgraph {

enum class ErrorKind {
  kInvalidArgument,
  kUnknownDiagonal,
  kNotFlippable,
  kInvalidSequence,
  kBudgetExceeded,
  kUnsupported,
  kParse,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by apply_sequence / translate_sequence; step() is the 0-based index
// of the first step that could not be applied.
class SequenceError : public Error {
 public:
  SequenceError(std::size_t step, const std::string& message)
      : Error(ErrorKind::kInvalidSequence,
              "step " + std::to_string(step) + ": " + message),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace flipgraph
