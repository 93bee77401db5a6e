#pragma once

#include <stdexcept>
#include <string>

namespace oomet {

// Base for everything this library throws. CLI maps UsageError-derived
// types to exit code 2 and the rest to exit code 1.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: malformed source, malformed CSV, mismatched model/data.
class UsageError : public Error {
  public:
    using Error::Error;
};

class SyntaxError : public UsageError {
  public:
    SyntaxError(std::string path, int line, int column, const std::string& msg)
        : UsageError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          path_(std::move(path)), line_(line), column_(column) {}

    const std::string& path() const { return path_; }
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    std::string path_;
    int line_ = 0;
    int column_ = 0;
};

class EncodingError : public UsageError {
  public:
    using UsageError::UsageError;
};

class DuplicateClassError : public UsageError {
  public:
    using UsageError::UsageError;
};

class CycleError : public Error {
  public:
    using Error::Error;
};

class MissingColumnError : public UsageError {
  public:
    using UsageError::UsageError;
};

// A CSV cell that does not parse as the declared column type.
class CellTypeError : public UsageError {
  public:
    using UsageError::UsageError;
};

class EmptyDatasetError : public Error {
  public:
    using Error::Error;
};

class DegenerateColumnError : public Error {
  public:
    using Error::Error;
};

class LengthMismatchError : public Error {
  public:
    using Error::Error;
};

class EmptyGroupError : public Error {
  public:
    using Error::Error;
};

class InsufficientDataError : public Error {
  public:
    using Error::Error;
};

class SingleClassError : public Error {
  public:
    using Error::Error;
};

class NonFiniteError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatchError : public UsageError {
  public:
    using UsageError::UsageError;
};

class RepresentationMismatchError : public UsageError {
  public:
    using UsageError::UsageError;
};

}  // namespace oomet
