#pragma once

#include <stdexcept>
#include <string>

namespace cyclift {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Problems with user-supplied data (files, words, flags). CLI exit code 2.
class InputError : public Error {
public:
  using Error::Error;
};

/// A broken internal invariant. CLI exit code 3.
class InternalError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public InputError {
public:
  SyntaxError(int line, int column, std::string expected)
      : InputError("syntax error at line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": expected " + expected),
        line_(line), column_(column), expected_(std::move(expected)) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

private:
  int line_;
  int column_;
  std::string expected_;
};

class GenusMismatch : public InputError {
public:
  using InputError::InputError;
};

class IndexOutOfRange : public InputError {
public:
  using InputError::InputError;
};

class DuplicateRelatorLabel : public InputError {
public:
  using InputError::InputError;
};

/// substitute() saw a generator with no assigned image.
class MissingImage : public InputError {
public:
  explicit MissingImage(const std::string& generator)
      : InputError("no image given for generator " + generator), generator_(generator) {}

  const std::string& generator() const noexcept { return generator_; }

private:
  std::string generator_;
};

/// theta_shift() saw a non-X generator.
class NonCyclicGenerator : public InputError {
public:
  using InputError::InputError;
};

class GammaSumNotZeroModN : public InputError {
public:
  using InputError::InputError;
};

/// The vector does not solve H x + b = 0 (mod n); carries the first violated row.
class InvalidMonodromy : public InputError {
public:
  InvalidMonodromy(int row, const std::string& detail)
      : InputError("invalid monodromy: congruence row " + std::to_string(row) +
                   " violated (" + detail + ")"),
        row_(row) {}

  int row() const noexcept { return row_; }

private:
  int row_;
};

class PadTooShort : public InputError {
public:
  using InputError::InputError;
};

class SearchSpaceTooLarge : public InputError {
public:
  using InputError::InputError;
};

/// Enumeration was asked to materialize more solutions than supported.
/// The exact solution count is carried as a decimal string.
class CountExceedsLimit : public InputError {
public:
  explicit CountExceedsLimit(std::string count)
      : InputError("solution count " + count + " exceeds the enumeration limit"),
        count_(std::move(count)) {}

  const std::string& count() const noexcept { return count_; }

private:
  std::string count_;
};

class InvariantViolation : public InternalError {
public:
  using InternalError::InternalError;
};

}  // namespace cyclift
