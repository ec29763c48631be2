#pragma once

#include <stdexcept>
#include <string>

namespace resovar {

enum class ErrorCode {
  MalformedNumber,
  ZeroTriple,
  DuplicateLine,
  IndexOutOfRange,
  DimensionMismatch,
  UnsupportedClass,
  ChartMismatch,
  SumNonzero,
  SearchExhausted,
  UnknownFixture,
  BadInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

  // Domain errors exit with status 1, input errors with status 2.
  bool is_domain_error() const;

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace resovar
