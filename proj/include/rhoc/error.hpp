#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rhoc {

enum class ErrorCode {
  AllRowsZero,
  DimensionMismatch,
  MixedAmbient,
  MixedField,
  InvalidPartition,
  MismatchedGroundSet,
  TooLarge,
  BadPrime,
  BadScalar,
  NotInvertible,
  ZeroSubspace,
  BadOrder,
  CharTooSmall,
  DimTooSmall,
  BadVertex,
  LoopEdge,
  DuplicateEdge,
  TooFewVertices,
  UnknownField,
  Unsupported,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

// Input or precondition failure. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// A broken internal invariant (a bug, or a mathematical claim that failed on
// this input). The CLI maps these to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

inline void check_invariant(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace rhoc
