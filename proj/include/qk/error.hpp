#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qk {

enum class ErrorCode {
  InvalidRootSystem,
  DimensionMismatch,
  NotDominant,
  OutOfDomain,
  InvalidModel,
  InvalidLabel,
  NotTraceSymmetric,
  MissingQData,
  NotExact,
  Divergent,
  Inconclusive,
  InvalidArgument,
  MalformedSpec,
  UnknownCommand,
  ConflictingFlags,
  Io,
};

/// Stable diagnostic identifier, e.g. "E_OUT_OF_DOMAIN".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qk
