// SPDX-License-Identifier: Apache-2.0
#include "castreg/error.hpp"

namespace castreg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::OrderOverflow: return "OrderOverflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::BadConstraint: return "BadConstraint";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotSemiUniform: return "NotSemiUniform";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ConstructionStuck: return "ConstructionStuck";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DuplicateParam: return "DuplicateParam";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::EmptySection: return "EmptySection";
    case ErrorCode::TooFew: return "TooFew";
    case ErrorCode::FrameNotFound: return "FrameNotFound";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace castreg
