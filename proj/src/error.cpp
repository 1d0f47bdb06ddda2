#include "circuit/error.hpp"

namespace circuit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidSequence: return "InvalidSequence";
  case ErrorKind::NotClosed: return "NotClosed";
  case ErrorKind::LengthMismatch: return "LengthMismatch";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
  case ErrorKind::DimensionShrink: return "DimensionShrink";
  case ErrorKind::BadDivisor: return "BadDivisor";
  case ErrorKind::NotEnoughSegments: return "NotEnoughSegments";
  case ErrorKind::SpreadLost: return "SpreadLost";
  case ErrorKind::InputNotPath: return "InputNotPath";
  case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  case ErrorKind::NegativeExponent: return "NegativeExponent";
  case ErrorKind::InsufficientData: return "InsufficientData";
  case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

} // namespace circuit
