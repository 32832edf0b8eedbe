// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfhmrs {

enum class ErrorKind {
  NotInvertible,
  ModuliNotCoprime,
  OutOfRange,
  RandomnessFailure,
  InvalidParams,
  Infeasible,
  MessageTooLarge,
  ShareCountMismatch,
  BudgetExceeded,
  ConstantTooLarge,
  DegenerateBasis,
  SearchSpaceTooLarge,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure surfaced by the library is an Error carrying its kind; callers
// that need to branch (the CLI maps kinds to exit codes) inspect kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::ModuliNotCoprime: return "ModuliNotCoprime";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::RandomnessFailure: return "RandomnessFailure";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::MessageTooLarge: return "MessageTooLarge";
    case ErrorKind::ShareCountMismatch: return "ShareCountMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConstantTooLarge: return "ConstantTooLarge";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace mfhmrs
