// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string_view>

#include "mfhmrs/scheme.hpp"

namespace mfhmrs {

// Arithmetic over ciphertext variables c1..ck and integer constants:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := 'c' <digits> | <digits> | '(' expr ')'
//
// '*' binds tighter than '+'/'-'; both are left-associative. Ciphertext
// operands map to hom_add / hom_sub / hom_mul, a constant operand to
// hom_const_add / hom_const_mul; constant-only subexpressions are folded.
class Circuit {
 public:
  struct Node;

  // Throws Error(ParseError) whose message starts with "column <n>:" (1-based).
  static Circuit parse(std::string_view text);

  // Highest variable index referenced (c3 -> 3).
  std::size_t variable_count() const { return variables_; }

  // Runs the budget ledger (and constant-size checks) without touching any
  // share. Throws BudgetExceeded / ConstantTooLarge exactly where evaluate would.
  Ledger check_budget(const KeyShape& shape, std::span<const Ledger> inputs) const;

  Ciphertext evaluate(const KeyShape& shape, std::span<const Ciphertext> inputs) const;

 private:
  std::shared_ptr<const Node> root_;
  std::size_t variables_ = 0;
};

}  // namespace mfhmrs
