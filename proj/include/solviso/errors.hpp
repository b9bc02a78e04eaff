#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace solviso {

enum class ErrorKind {
  ParseError,
  NotLatinSquare,
  NoIdentity,
  NonAssociative,
  MissingInverse,
  NotNested,
  NoSuchPrime,
  NotSolvable,
  NotGenerating,
  ProductMismatch,
  NotPairIso,
  MalformedEncoding,
  WitnessVerificationFailed,
  BadParams,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NotNested: return "NotNested";
    case ErrorKind::NoSuchPrime: return "NoSuchPrime";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::ProductMismatch: return "ProductMismatch";
    case ErrorKind::NotPairIso: return "NotPairIso";
    case ErrorKind::MalformedEncoding: return "MalformedEncoding";
    case ErrorKind::WitnessVerificationFailed: return "WitnessVerificationFailed";
    case ErrorKind::BadParams: return "BadParams";
  }
  return "Unknown";
}

/// Single exception type for the library; `kind()` identifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace solviso
