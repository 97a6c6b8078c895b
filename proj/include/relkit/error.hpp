#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relkit {

enum class Errc {
  DuplicateLabel,
  IndexOutOfRange,
  CapExceeded,
  TypeMismatch,
  NotAnEquivalence,
  NotAPoint,
  NotAMapping,
  ParseError,
  TypeError,
  UnboundIdentifier,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::NotAnEquivalence: return "NotAnEquivalence";
    case Errc::NotAPoint: return "NotAPoint";
    case Errc::NotAMapping: return "NotAMapping";
    case Errc::ParseError: return "ParseError";
    case Errc::TypeError: return "TypeError";
    case Errc::UnboundIdentifier: return "UnboundIdentifier";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Source position for parse and type errors, 1-based.
struct Span {
  std::size_t line = 0;
  std::size_t col = 0;
};

class LocatedError : public Error {
 public:
  LocatedError(Errc code, Span at, const std::string& msg)
      : Error(code, std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + msg), at_(at) {}

  Span where() const noexcept { return at_; }

 private:
  Span at_;
};

}  // namespace relkit
