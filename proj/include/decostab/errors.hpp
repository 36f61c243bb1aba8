#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace decostab {

/// Failure categories. The CLI maps them onto exit codes: budget failures
/// exit with 3, everything else with 2.
enum class ErrorKind {
  MixedRank,
  ZeroRepresentation,
  Inhomogeneous,
  NoSolutions,
  IndexOutOfRange,
  NotOrdered,
  NonZeroSum,
  LengthMismatch,
  EmptySupport,
  RankOrder,
  ChiNotInA,
  NotPointed,
  TooManyStates,
  SigmaNotNormalized,
  NonpositiveDelta,
  NoCriticalType,
  InconsistentFlags,
  Overflow,
  InvalidArgument,
  Schema,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace decostab
