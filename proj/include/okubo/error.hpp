#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace okubo {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NonPrimeCharacteristic,
  ReducibleModulus,
  DivisionByZero,
  MixedFields,
  ZeroElement,
  FactorizationOverflow,
  NotQuadraticExtension,
  FieldTooLarge,
  WrongCharacteristic,
  NotIdempotent,
  UnexpectedRank,
  NotTraceZero,
  NoOmega,
  StructureMismatch,
  DegenerateForm,
  BadExtension,
  ClosureOverflow,
  GroupTooLarge,
  NotSubgroup,
  NotNormal,
  WrongRank,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace okubo
