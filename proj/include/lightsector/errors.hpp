#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lightsector {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

/// Raised by pairing construction; carries the first offending 0-based entry.
class NotSkewSymmetric : public Error {
 public:
  NotSkewSymmetric(std::size_t row, std::size_t col, const std::string& msg)
      : Error(msg), row_(row), col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// A cross-check between independently computed realizations failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

class BlockSeparationRequired : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& msg)
      : Error(format(line, field, msg)), line_(line), field_(std::move(field)) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field,
                            const std::string& msg) {
    std::string out;
    if (line != 0) out += "line " + std::to_string(line) + ": ";
    if (!field.empty()) out += "field '" + field + "': ";
    return out + msg;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace lightsector
