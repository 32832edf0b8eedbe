// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/circuit.hpp"

#include <cctype>
#include <string>
#include <utility>
#include <variant>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

struct Circuit::Node {
  enum class Kind { Variable, Constant, Add, Sub, Mul, Negate };
  Kind kind;
  std::size_t variable = 0;  // 1-based
  BigInt constant;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Circuit::Node>;
using Kind = Circuit::Node::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all(std::size_t& variables) {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    variables = variables_;
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  static NodePtr binary(Kind kind, NodePtr lhs, NodePtr rhs) {
    auto node = std::make_shared<Circuit::Node>();
    node->kind = kind;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Kind::Add, lhs, term());
      } else if (accept('-')) {
        lhs = binary(Kind::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (accept('*')) lhs = binary(Kind::Mul, lhs, unary());
    return lhs;
  }

  NodePtr unary() {
    if (accept('-')) return binary(Kind::Negate, unary(), nullptr);
    return primary();
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected operand, found end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    auto node = std::make_shared<Circuit::Node>();
    if (ch == 'c') {
      ++pos_;
      const std::string index = digits();
      if (index.empty() || index.front() == '0' || index.size() > 6)
        fail("expected variable index after 'c'");
      node->kind = Kind::Variable;
      node->variable = std::stoul(index);
      variables_ = std::max(variables_, node->variable);
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      node->kind = Kind::Constant;
      node->constant = BigInt(digits());
      return node;
    }
    fail("expected operand");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t variables_ = 0;
};

// Evaluation is shared between the ledger dry run and the real thing; Ops
// supplies the ciphertext-side primitives for a given value type.
template <typename Cipher, typename Ops>
std::variant<BigInt, Cipher> eval(const Circuit::Node& node, std::span<const Cipher> inputs,
                                  const Ops& ops) {
  using Value = std::variant<BigInt, Cipher>;
  switch (node.kind) {
    case Kind::Variable:
      if (node.variable > inputs.size())
        throw Error(ErrorKind::ParseError,
                    "circuit references c" + std::to_string(node.variable) + " but only " +
                        std::to_string(inputs.size()) + " inputs were given");
      return Value(inputs[node.variable - 1]);
    case Kind::Constant:
      return Value(node.constant);
    case Kind::Negate: {
      Value v = eval<Cipher>(*node.lhs, inputs, ops);
      if (auto* k = std::get_if<BigInt>(&v)) return Value(BigInt(-*k));
      return Value(ops.negate(std::get<Cipher>(v)));
    }
    default:
      break;
  }
  Value a = eval<Cipher>(*node.lhs, inputs, ops);
  Value b = eval<Cipher>(*node.rhs, inputs, ops);
  auto* ka = std::get_if<BigInt>(&a);
  auto* kb = std::get_if<BigInt>(&b);
  switch (node.kind) {
    case Kind::Add:
      if (ka && kb) return Value(BigInt(*ka + *kb));
      if (ka) return Value(ops.const_add(std::get<Cipher>(b), *ka));
      if (kb) return Value(ops.const_add(std::get<Cipher>(a), *kb));
      return Value(ops.add(std::get<Cipher>(a), std::get<Cipher>(b)));
    case Kind::Sub:
      if (ka && kb) return Value(BigInt(*ka - *kb));
      if (ka) return Value(ops.const_add(ops.negate(std::get<Cipher>(b)), *ka));
      if (kb) return Value(ops.const_add(std::get<Cipher>(a), BigInt(-*kb)));
      return Value(ops.add(std::get<Cipher>(a), ops.negate(std::get<Cipher>(b))));
    case Kind::Mul:
      if (ka && kb) return Value(BigInt(*ka * *kb));
      if (ka) return Value(ops.const_mul(std::get<Cipher>(b), *ka));
      if (kb) return Value(ops.const_mul(std::get<Cipher>(a), *kb));
      return Value(ops.mul(std::get<Cipher>(a), std::get<Cipher>(b)));
    default:
      break;
  }
  throw Error(ErrorKind::ParseError, "malformed circuit node");
}

struct LedgerOps {
  const KeyShape& shape;
  Ledger add(Ledger a, Ledger b) const { return ledger_add(shape, a, b); }
  Ledger mul(Ledger a, Ledger b) const { return ledger_mul(shape, a, b); }
  Ledger negate(Ledger a) const { return a; }
  Ledger const_add(Ledger a, const BigInt& k) const {
    if (bit_length(k) > static_cast<std::size_t>(shape.message_space_bits))
      throw Error(ErrorKind::ConstantTooLarge,
                  "|a| must be < 2^" + std::to_string(shape.message_space_bits));
    return ledger_const_add(shape, a);
  }
  Ledger const_mul(Ledger a, const BigInt& k) const {
    if (bit_length(k) > static_cast<std::size_t>(shape.msg_bits))
      throw Error(ErrorKind::ConstantTooLarge, "|a| must be < 2^" + std::to_string(shape.msg_bits));
    return ledger_const_mul(shape, a);
  }
};

struct CipherOps {
  const KeyShape& shape;
  Ciphertext add(const Ciphertext& a, const Ciphertext& b) const { return hom_add(shape, a, b); }
  Ciphertext mul(const Ciphertext& a, const Ciphertext& b) const { return hom_mul(shape, a, b); }
  Ciphertext negate(const Ciphertext& a) const { return hom_negate(a); }
  Ciphertext const_add(const Ciphertext& a, const BigInt& k) const {
    return hom_const_add(shape, a, k);
  }
  Ciphertext const_mul(const Ciphertext& a, const BigInt& k) const {
    return hom_const_mul(shape, a, k);
  }
};

}  // namespace

Circuit Circuit::parse(std::string_view text) {
  Circuit c;
  Parser parser(text);
  c.root_ = parser.parse_all(c.variables_);
  if (c.variables_ == 0)
    throw Error(ErrorKind::ParseError, "column 1: circuit has no ciphertext variable");
  return c;
}

Ledger Circuit::check_budget(const KeyShape& shape, std::span<const Ledger> inputs) const {
  auto v = eval<Ledger>(*root_, inputs, LedgerOps{shape});
  if (auto* l = std::get_if<Ledger>(&v)) return *l;
  throw Error(ErrorKind::ParseError, "column 1: circuit result is a constant");
}

Ciphertext Circuit::evaluate(const KeyShape& shape, std::span<const Ciphertext> inputs) const {
  for (const auto& c : inputs) {
    if (c.shares.size() != shape.share_count)
      throw Error(ErrorKind::ShareCountMismatch, "input ciphertext share count differs from key");
  }
  auto v = eval<Ciphertext>(*root_, inputs, CipherOps{shape});
  if (auto* c = std::get_if<Ciphertext>(&v)) return std::move(*c);
  throw Error(ErrorKind::ParseError, "column 1: circuit result is a constant");
}

}  // namespace mfhmrs
