#pragma once

#include <stdexcept>
#include <string>

namespace grsdual {

enum class Errc {
  // field construction and arithmetic
  NotPrime,
  FieldTooLarge,
  InvalidParams,
  DivisionByZero,
  ZeroArgument,
  ContextMismatch,
  NotASquare,
  NotADivisor,
  // code assembly
  DuplicatePoints,
  ZeroScaling,
  BadDimension,
  InfinityInSet,
  NotAMember,
  InfinityUnsupported,
  LengthMismatch,
  TooLarge,
  TooManyErasures,
  InconsistentWord,
  // self-dual scaling
  CharactersNotEqual,
  NegCharacterNotSquare,
  OddLength,
  EvenLength,
  OddN,
  InternalVerificationFailed,
  // coset constructions
  CaseConditionViolated,
  // Mobius transport
  NotSelfDual,
  NoInfinity,
  FullProjectiveLine,
  // serialization / CLI
  MalformedDescriptor,
  IoFailure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::NotASquare: return "NotASquare";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::DuplicatePoints: return "DuplicatePoints";
    case Errc::ZeroScaling: return "ZeroScaling";
    case Errc::BadDimension: return "BadDimension";
    case Errc::InfinityInSet: return "InfinityInSet";
    case Errc::NotAMember: return "NotAMember";
    case Errc::InfinityUnsupported: return "InfinityUnsupported";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooManyErasures: return "TooManyErasures";
    case Errc::InconsistentWord: return "InconsistentWord";
    case Errc::CharactersNotEqual: return "CharactersNotEqual";
    case Errc::NegCharacterNotSquare: return "NegCharacterNotSquare";
    case Errc::OddLength: return "OddLength";
    case Errc::EvenLength: return "EvenLength";
    case Errc::OddN: return "OddN";
    case Errc::InternalVerificationFailed: return "InternalVerificationFailed";
    case Errc::CaseConditionViolated: return "CaseConditionViolated";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::NoInfinity: return "NoInfinity";
    case Errc::FullProjectiveLine: return "FullProjectiveLine";
    case Errc::MalformedDescriptor: return "MalformedDescriptor";
    case Errc::IoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace grsdual
