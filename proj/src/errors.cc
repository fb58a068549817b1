#include "sbfl/errors.h"

#include <utility>

namespace sbfl {

const char* ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kIo:
      return "io error";
    case ParseErrorKind::kDimensionMismatch:
      return "dimension mismatch";
    case ParseErrorKind::kMalformedRow:
      return "malformed row";
    case ParseErrorKind::kDuplicateComponent:
      return "duplicate component";
    case ParseErrorKind::kNonBinaryCell:
      return "non-binary cell";
    case ParseErrorKind::kOutcomeMismatch:
      return "outcome mismatch";
    case ParseErrorKind::kSchema:
      return "schema violation";
    case ParseErrorKind::kUnknownEnumValue:
      return "unknown enumeration value";
    case ParseErrorKind::kDuplicateKey:
      return "duplicate key";
    case ParseErrorKind::kReferentialIntegrity:
      return "referential integrity";
  }
  return "parse error";
}

namespace {

std::string FormatParseError(ParseErrorKind kind, const std::string& file,
                             std::size_t line, const std::string& detail) {
  std::string out = file;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  out += ToString(kind);
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::string file,
                       std::size_t line, const std::string& detail)
    : std::runtime_error(FormatParseError(kind, file, line, detail)),
      kind_(kind),
      file_(std::move(file)),
      line_(line) {}

}  // namespace sbfl
