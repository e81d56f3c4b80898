#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsb {

enum class ErrorCode {
  UnknownSymbol,
  SyntaxError,
  AlphabetMismatch,
  EmptyPattern,
  TowerSymbolMissing,
  BasisMismatch,
  ZeroPolynomial,
  NonMonicRelation,
  CapacityExceeded,
  UncertifiedBasis,
  MalformedAmbiguity,
  LeadingNotBelowW,
  EmptyWord,
  NotALSW,
  TableIncomplete,
  IndexOutOfRange,
  SymbolClash,
  NonCanonicalSupport,
  SingleLetterAlphabet,
  OrientationMismatch,
  CertificationFailed,
  InvalidArgument,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::TowerSymbolMissing: return "TowerSymbolMissing";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NonMonicRelation: return "NonMonicRelation";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::UncertifiedBasis: return "UncertifiedBasis";
    case ErrorCode::MalformedAmbiguity: return "MalformedAmbiguity";
    case ErrorCode::LeadingNotBelowW: return "LeadingNotBelowW";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotALSW: return "NotALSW";
    case ErrorCode::TableIncomplete: return "TableIncomplete";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SymbolClash: return "SymbolClash";
    case ErrorCode::NonCanonicalSupport: return "NonCanonicalSupport";
    case ErrorCode::SingleLetterAlphabet: return "SingleLetterAlphabet";
    case ErrorCode::OrientationMismatch: return "OrientationMismatch";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `detail()` carries the offending
/// index or byte position where one applies (relation index, pair index,
/// parse position).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> detail = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> detail_;
};

}  // namespace gsb
