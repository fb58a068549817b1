#ifndef SBFL_ERRORS_H_
#define SBFL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sbfl {

// Caller violated a precondition (index out of range, bad enum name, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input data is inconsistent (unknown bug id, infeasible parameters, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  kIo,
  kDimensionMismatch,
  kMalformedRow,
  kDuplicateComponent,
  kNonBinaryCell,
  kOutcomeMismatch,
  kSchema,
  kUnknownEnumValue,
  kDuplicateKey,
  kReferentialIntegrity,
};

const char* ToString(ParseErrorKind kind);

// A file could not be read or did not conform to its format. `line` is
// 1-based; 0 means the error is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string file, std::size_t line,
             const std::string& detail);

  ParseErrorKind kind() const { return kind_; }
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  ParseErrorKind kind_;
  std::string file_;
  std::size_t line_;
};

}  // namespace sbfl

#endif  // SBFL_ERRORS_H_
