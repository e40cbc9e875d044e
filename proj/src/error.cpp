#include "stw/error.hpp"

namespace stw {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyDecomposition: return "EmptyDecomposition";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Unrealizable: return "Unrealizable";
    case ErrorKind::NotQuasiCaterpillar: return "NotQuasiCaterpillar";
    case ErrorKind::JointWithoutPendant: return "JointWithoutPendant";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::InconsistentOrder: return "InconsistentOrder";
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
  }
  return "Unknown";
}

}  // namespace stw
