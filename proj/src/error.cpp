#include "stabkit/error.hpp"

namespace stabkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::ZeroOneParamSubgroup: return "ZeroOneParamSubgroup";
    case ErrorCode::WrongAmbient: return "WrongAmbient";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::NotWeylInvariant: return "NotWeylInvariant";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotASlice: return "NotASlice";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::InvalidGrading: return "InvalidGrading";
    case ErrorCode::NoPositivePart: return "NoPositivePart";
    case ErrorCode::NotInAttractingSet: return "NotInAttractingSet";
    case ErrorCode::MissingResidualTorus: return "MissingResidualTorus";
    case ErrorCode::Unstable: return "Unstable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::UnsupportedQuery: return "UnsupportedQuery";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace stabkit
