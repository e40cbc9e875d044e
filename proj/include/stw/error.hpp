#pragma once

#include <stdexcept>
#include <string>

namespace stw {

enum class ErrorKind {
  InvalidTree,
  ParseError,
  EmptyDecomposition,
  EmptySet,
  OutOfRange,
  Overflow,
  Unrealizable,
  NotQuasiCaterpillar,
  JointWithoutPendant,
  InvalidIndex,
  ParityMismatch,
  InconsistentOrder,
  InvalidDescriptor,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (and the CLI) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace stw
