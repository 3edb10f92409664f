#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace invol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad table shape, out-of-range index, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public InputError {
 public:
  IndexOutOfRange(std::size_t row, std::size_t col, std::int64_t value);
  std::size_t row;
  std::size_t col;
  std::int64_t value;
};

class NotAssociative : public InputError {
 public:
  NotAssociative(std::size_t i, std::size_t j, std::size_t k);
  std::size_t i;
  std::size_t j;
  std::size_t k;
};

class DegreeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotAGroup : public InputError {
 public:
  using InputError::InputError;
};

class NoEdges : public InputError {
 public:
  NoEdges() : InputError("graph has no edges") {}
};

class NotAnInvolution : public InputError {
 public:
  using InputError::InputError;
};

class NotGraphAutomorphism : public InputError {
 public:
  using InputError::InputError;
};

class ContextMismatch : public InputError {
 public:
  ContextMismatch() : InputError("trace words belong to different contexts") {}
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A configured work limit was hit. Results are never silently truncated.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")"), limit(limit) {}
  std::uint64_t limit;
};

class SearchBudgetExceeded : public BudgetExceeded {
 public:
  explicit SearchBudgetExceeded(std::uint64_t limit)
      : BudgetExceeded("search node budget exceeded", limit) {}
};

class OrderBudgetExceeded : public BudgetExceeded {
 public:
  explicit OrderBudgetExceeded(std::uint64_t limit)
      : BudgetExceeded("group order budget exceeded", limit) {}
};

class LengthBudgetExceeded : public BudgetExceeded {
 public:
  explicit LengthBudgetExceeded(std::uint64_t limit)
      : BudgetExceeded("trace word length budget exceeded", limit) {}
};

}  // namespace invol
