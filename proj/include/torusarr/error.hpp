#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusarr {

enum class ErrorCode {
  InvalidInput,
  NonPrimitive,
  DimensionMismatch,
  ZeroNormal,
  DuplicateSubtorus,
  NotUnimodular,
  ParallelNormals,
  ParseError,
  ResourceLimit,
  InvalidParams,
  ParamOutOfRange,
  BadOffsets,
  NotFeasible,
  TheoremViolation,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace torusarr
