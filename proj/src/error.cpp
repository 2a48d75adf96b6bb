#include "toricforge/error.hpp"

namespace toricforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "SINGULAR";
    case ErrorCode::Unbounded: return "UNBOUNDED";
    case ErrorCode::Empty: return "EMPTY";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::Redundant: return "REDUNDANT";
    case ErrorCode::EmptyFace: return "EMPTY_FACE";
    case ErrorCode::NotQuasirational: return "NOT_QUASIRATIONAL";
    case ErrorCode::NotInModel: return "NOT_IN_MODEL";
    case ErrorCode::NoSeparation: return "NO_SEPARATION";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::DependentTriple: return "DEPENDENT_TRIPLE";
    case ErrorCode::NotLocalizable: return "NOT_LOCALIZABLE";
    case ErrorCode::UnknownSolid: return "UNKNOWN_SOLID";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::OutOfPolytope: return "OUT_OF_POLYTOPE";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace toricforge
