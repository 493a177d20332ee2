#pragma once

#include <stdexcept>
#include <string>

namespace gradalg {

/* Every precondition violation raises Error with a machine-readable kind.
   Kinds are shared across modules so callers can branch without string
   matching. */
enum class ErrorKind {
  NotLatinSquare,
  NoIdentity,
  NotAssociative,
  RootOrderMismatch,
  DivisionByZero,
  NotADivisor,
  GroupMismatch,
  EmbeddingMismatch,
  IndexOutOfRange,
  DegreeMismatch,
  SetsNotDisjoint,
  MixedDegreesInSet,
  ProductsDisagree,
  CocyclesCohomologous,
  InvalidMoveParameter,
  AmbientMismatch,
  PresentationsEquivalent,
  BudgetExceeded,
  ParseError,
  Internal,
};

const char* error_kind_name(ErrorKind k);

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::RootOrderMismatch: return "RootOrderMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::EmbeddingMismatch: return "EmbeddingMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SetsNotDisjoint: return "SetsNotDisjoint";
    case ErrorKind::MixedDegreesInSet: return "MixedDegreesInSet";
    case ErrorKind::ProductsDisagree: return "ProductsDisagree";
    case ErrorKind::CocyclesCohomologous: return "CocyclesCohomologous";
    case ErrorKind::InvalidMoveParameter: return "InvalidMoveParameter";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::PresentationsEquivalent: return "PresentationsEquivalent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace gradalg
