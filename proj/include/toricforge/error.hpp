#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricforge {

enum class ErrorCode {
  Singular,
  Unbounded,
  Empty,
  Degenerate,
  Redundant,
  EmptyFace,
  NotQuasirational,
  NotInModel,
  NoSeparation,
  DimMismatch,
  DependentTriple,
  NotLocalizable,
  UnknownSolid,
  Parse,
  OutOfPolytope,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricforge
