#pragma once

#include <stdexcept>
#include <string>

namespace slicess {

enum class ErrorKind {
  INVALID_ARGUMENT,
  COMPOSITION_NONZERO,
  SHAPE_MISMATCH,
  NOT_TWO_PRIMARY,
  ZERO_INPUT,
  NEGATIVE_DEGREE,
  PARSE,
  VANISHING_VIOLATION,
  SURJECTIVITY_VIOLATION,
  SHAPE_VIOLATION,
  UNDERSPECIFIED,
  PRECONDITION,
  UNSUPPORTED_PAIRING,
  REGION_TOO_SMALL,
  NONTERMINATING_SUPPORT,
  PATTERN_MISMATCH,
  VCD_VIOLATION,
  PARITY_PRECONDITION,
  INFINITE_ORDER,
  SHAPE_FLAG_MISSING,
  MISSING_ZETA,
  NO_ORACLE,
  IO,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace slicess
