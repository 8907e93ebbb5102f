#pragma once

#include <stdexcept>
#include <string>

namespace folcoh {

// Stable diagnostic codes surfaced by the CLI and asserted in tests.
enum class ErrorCode {
    ModelMismatch,
    IncompleteDerivation,
    MissingConjugate,
    Purity,
    NotASubspace,
    UnknownGenerator,
    DuplicateGenerator,
    DegreeMismatch,
    MalformedScalar,
    MissingEnd,
    UnknownSection,
    SyntaxError,
    InvalidModel,
    MissingFoliation,
    NotBigraded,
    MissingMetric,
    MissingOrientation,
    Integrability,
    InternalConsistency,
    Usage,
    Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

// Parse diagnostics always carry a position.
class ParseError : public Error {
  public:
    ParseError(ErrorCode code, int line, int column, std::string message)
        : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace folcoh
