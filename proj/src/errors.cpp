#include "resovar/errors.hpp"

namespace resovar {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedNumber: return "MalformedNumber";
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::DuplicateLine: return "DuplicateLine";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::SumNonzero: return "SumNonzero";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

bool Error::is_domain_error() const {
  return code_ == ErrorCode::UnsupportedClass || code_ == ErrorCode::SearchExhausted;
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace resovar
