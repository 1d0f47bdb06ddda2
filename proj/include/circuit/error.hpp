#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circuit {

enum class ErrorKind {
  InvalidSequence,
  NotClosed,
  LengthMismatch,
  OutOfRange,
  DimensionTooLarge,
  DimensionShrink,
  BadDivisor,
  NotEnoughSegments,
  SpreadLost,
  InputNotPath,
  PreconditionFailed,
  NegativeExponent,
  InsufficientData,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can map it to
// a stable exit code and tests can match on it.
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

} // namespace circuit
