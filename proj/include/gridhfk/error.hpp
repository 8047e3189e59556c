#pragma once

#include <stdexcept>
#include <string>

namespace gridhfk {

enum class ErrorKind {
  Parse,
  SizeMismatch,
  NotPermutation,
  MarkerCollision,
  MultiComponent,
  IllegalCommutation,
  NoSuchPattern,
  OutOfRange,
  CornerConditionUnmet,
  DimensionMismatch,
  BudgetExceeded,
  DivisionInexact,
  AsymmetricResult,
  NotACycle,
  SlMismatch,
};

const char* to_string(ErrorKind kind);

// All library failures are reported through this type; the kind drives the
// CLI exit code (validation vs budget).
class GridError : public std::runtime_error {
 public:
  GridError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gridhfk
