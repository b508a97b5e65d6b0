#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

enum class ErrorCode {
  BadNumber,
  MalformedJson,
  DuplicateVertex,
  UnknownVertex,
  SelfLoop,
  HorizontalEdge,
  Disconnected,
  WrongShape,
  InvalidDrawing,
  Degenerate,
  HasCrossings,
  MapMismatch,
  InvalidArgument,
  BudgetExhausted,
  Internal,
};

const char* to_string(ErrorCode code);

/// Library error. Everything the library rejects is reported through this
/// type; the code lets the CLI map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when an exhaustive search runs out of its state budget. Carries the
/// best value found before giving up (or -1 if none was found).
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& message, long long best_so_far)
      : Error(ErrorCode::BudgetExhausted, message), best_(best_so_far) {}

  long long best_so_far() const noexcept { return best_; }

 private:
  long long best_;
};

}  // namespace reeb
