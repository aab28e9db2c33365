#include "torelli/error.hpp"

namespace torelli {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotUnipotent: return "NOT_UNIPOTENT";
    case ErrorCode::ValuationExceedsOrder: return "VALUATION_EXCEEDS_ORDER";
    case ErrorCode::OddN: return "ODD_N";
    case ErrorCode::IndexRange: return "INDEX_RANGE";
    case ErrorCode::NoSolution: return "NO_SOLUTION";
    case ErrorCode::SearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::RelationFailure: return "RELATION_FAILURE";
    case ErrorCode::DetNotPm1: return "DET_NOT_PM1";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::BadGenerator: return "BAD_GENERATOR";
    case ErrorCode::NotTorelli: return "NOT_TORELLI";
    case ErrorCode::Degree0Nontrivial: return "DEGREE0_NONTRIVIAL";
    case ErrorCode::DepthMismatch: return "DEPTH_MISMATCH";
    case ErrorCode::NotInvolutive: return "NOT_INVOLUTIVE";
    case ErrorCode::NotInvertible: return "NOT_INVERTIBLE";
    case ErrorCode::InexactDivision: return "INEXACT_DIVISION";
  }
  return "UNKNOWN";
}

}  // namespace torelli
