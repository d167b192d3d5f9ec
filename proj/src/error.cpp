#include "blockset/error.hpp"

namespace blockset {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ShuffleArityMismatch: return "ShuffleArityMismatch";
    case ErrorKind::EmptyLanguage: return "EmptyLanguage";
    case ErrorKind::NotRanked: return "NotRanked";
    case ErrorKind::NotTrim: return "NotTrim";
    case ErrorKind::MultipleFinals: return "MultipleFinals";
    case ErrorKind::CoverBudgetExceeded: return "CoverBudgetExceeded";
    case ErrorKind::NoChange: return "NoChange";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace blockset
