#include "okubo/error.hpp"

namespace okubo {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::FactorizationOverflow: return "FactorizationOverflow";
    case ErrorCode::NotQuadraticExtension: return "NotQuadraticExtension";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::UnexpectedRank: return "UnexpectedRank";
    case ErrorCode::NotTraceZero: return "NotTraceZero";
    case ErrorCode::NoOmega: return "NoOmega";
    case ErrorCode::StructureMismatch: return "StructureMismatch";
    case ErrorCode::DegenerateForm: return "DegenerateForm";
    case ErrorCode::BadExtension: return "BadExtension";
    case ErrorCode::ClosureOverflow: return "ClosureOverflow";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::WrongRank: return "WrongRank";
  }
  return "Unknown";
}

}  // namespace okubo
