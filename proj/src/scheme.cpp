// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/scheme.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

namespace {

void require_shape(const KeyShape& shape, const Ciphertext& c) {
  if (c.shares.size() != shape.share_count)
    throw Error(ErrorKind::ShareCountMismatch,
                "ciphertext has " + std::to_string(c.shares.size()) +
                    " shares, key expects " + std::to_string(shape.share_count));
}

[[noreturn]] void over_budget(const char* which, int used, int limit) {
  throw Error(ErrorKind::BudgetExceeded,
              std::string(which) + ": " + std::to_string(used) + " > " +
                  std::to_string(limit));
}

Ledger checked(const KeyShape& shape, Ledger l) {
  if (l.mults > shape.max_mults) over_budget("multiplications", l.mults, shape.max_mults);
  if (l.adds > shape.max_adds) over_budget("additions", l.adds, shape.max_adds);
  return l;
}

Ledger ledger_of(const Ciphertext& c) { return {c.mults_used, c.adds_used}; }

}  // namespace

SecretKey SecretKey::assemble(const SchemeParams& params,
                              std::vector<BigInt> share_primes, BigInt u,
                              bool legacy) {
  if (params.share_count() < 1 ||
      share_primes.size() != static_cast<std::size_t>(params.share_count()))
    throw Error(ErrorKind::InvalidParams,
                "expected " + std::to_string(params.share_count()) +
                    " share primes, got " + std::to_string(share_primes.size()));
  for (std::size_t i = 0; i < share_primes.size(); ++i) {
    if (!is_probable_prime(share_primes[i], 40))
      throw Error(ErrorKind::InvalidParams,
                  "p[" + std::to_string(i + 1) + "] is not prime");
    for (std::size_t j = 0; j < i; ++j) {
      if (share_primes[i] == share_primes[j])
        throw Error(ErrorKind::InvalidParams, "share primes must be distinct");
    }
  }
  if (!is_probable_prime(u, 40))
    throw Error(ErrorKind::InvalidParams, "u is not prime");
  if (std::find(share_primes.begin(), share_primes.end(), u) != share_primes.end())
    throw Error(ErrorKind::InvalidParams, "u must differ from every share prime");

  SecretKey key;
  key.params_ = params;
  key.u_ = std::move(u);
  key.legacy_ = legacy;
  key.n_ = 1;
  for (const BigInt& p : share_primes) key.n_ *= p;
  for (const BigInt& p : share_primes) {
    BigInt cof = key.n_ / p;
    BigInt inv = mod_inverse(floor_mod(cof, p), p);
    key.cofactors_.push_back({std::move(cof), std::move(inv)});
  }
  key.share_primes_ = std::move(share_primes);
  return key;
}

KeyShape KeyShape::of(const SecretKey& key) {
  const SchemeParams& p = key.params();
  return KeyShape{key.share_count(), p.max_mults, p.max_adds, p.msg_bits,
                  p.message_space_bits()};
}

Ledger ledger_add(const KeyShape& shape, Ledger a, Ledger b) {
  return checked(shape, {std::max(a.mults, b.mults), a.adds + b.adds + 1});
}

Ledger ledger_mul(const KeyShape& shape, Ledger a, Ledger b) {
  return checked(shape, {a.mults + b.mults + 1, a.adds + b.adds});
}

Ledger ledger_const_add(const KeyShape& shape, Ledger a) {
  return checked(shape, {a.mults, a.adds + 1});
}

Ledger ledger_const_mul(const KeyShape& shape, Ledger a) {
  return checked(shape, {a.mults + 1, a.adds});
}

SecretKey keygen(const SchemeParams& params, EntropySource& rng) {
  require_valid(params);
  return keygen_unchecked(params, rng);
}

SecretKey keygen_unchecked(const SchemeParams& params, EntropySource& rng) {
  const auto bits = static_cast<std::size_t>(params.p_bits);
  std::vector<BigInt> primes;
  while (primes.size() < static_cast<std::size_t>(params.share_count())) {
    BigInt p = gen_prime(bits, rng);
    if (std::find(primes.begin(), primes.end(), p) == primes.end())
      primes.push_back(std::move(p));
  }
  const BigInt message_space = pow2(static_cast<std::size_t>(params.message_space_bits()));
  BigInt u;
  do {
    u = gen_prime(static_cast<std::size_t>(params.u_bits), rng);
  } while (u <= message_space ||
           std::find(primes.begin(), primes.end(), u) != primes.end());
  return SecretKey::assemble(params, std::move(primes), std::move(u));
}

Ciphertext encrypt_with_randomness(const SecretKey& key, const Plaintext& m,
                                   const BigInt& g) {
  if (m.value < 0 || bit_length(m.value) > static_cast<std::size_t>(key.params().msg_bits))
    throw Error(ErrorKind::MessageTooLarge,
                m.value.get_str() + " is outside [0, 2^" +
                    std::to_string(key.params().msg_bits) + ")");
  const BigInt value = m.value + g * key.u();
  Ciphertext c;
  c.shares.reserve(key.share_count());
  for (const BigInt& p : key.share_primes()) c.shares.push_back(floor_mod(value, p));
  return c;
}

Ciphertext encrypt(const SecretKey& key, const Plaintext& m, EntropySource& rng) {
  BigInt g;
  if (key.legacy()) {
    g = random_below(rng, key.u() - 1) + 1;  // 0 < g < u
  } else {
    g = random_exact_bits(rng, static_cast<std::size_t>(key.params().g_bits));
  }
  return encrypt_with_randomness(key, m, g);
}

BigInt reconstruct(const SecretKey& key, const Ciphertext& c) {
  require_shape(KeyShape::of(key), c);
  BigInt acc = 0;
  for (std::size_t i = 0; i < c.shares.size(); ++i) {
    const BigInt& p = key.share_primes()[i];
    const CrtCofactor& cf = key.cofactors()[i];
    acc += floor_mod(c.shares[i], p) * cf.cofactor * cf.inverse;
  }
  return centered_mod(acc, key.n());
}

Plaintext decrypt(const SecretKey& key, const Ciphertext& c) {
  return Plaintext{floor_mod(reconstruct(key, c), key.u())};
}

Ciphertext hom_add(const KeyShape& shape, const Ciphertext& a, const Ciphertext& b) {
  require_shape(shape, a);
  require_shape(shape, b);
  const Ledger l = ledger_add(shape, ledger_of(a), ledger_of(b));
  Ciphertext out;
  out.shares.reserve(a.shares.size());
  for (std::size_t i = 0; i < a.shares.size(); ++i)
    out.shares.push_back(a.shares[i] + b.shares[i]);
  out.mults_used = l.mults;
  out.adds_used = l.adds;
  out.const_ops_bits = a.const_ops_bits + b.const_ops_bits;
  return out;
}

Ciphertext hom_negate(const Ciphertext& c) {
  Ciphertext out = c;
  for (BigInt& s : out.shares) s = -s;
  return out;
}

Ciphertext hom_sub(const KeyShape& shape, const Ciphertext& a, const Ciphertext& b) {
  return hom_add(shape, a, hom_negate(b));
}

Ciphertext hom_mul(const KeyShape& shape, const Ciphertext& a, const Ciphertext& b) {
  require_shape(shape, a);
  require_shape(shape, b);
  const Ledger l = ledger_mul(shape, ledger_of(a), ledger_of(b));
  Ciphertext out;
  out.shares.reserve(a.shares.size());
  for (std::size_t i = 0; i < a.shares.size(); ++i)
    out.shares.push_back(a.shares[i] * b.shares[i]);
  out.mults_used = l.mults;
  out.adds_used = l.adds;
  out.const_ops_bits = a.const_ops_bits + b.const_ops_bits;
  return out;
}

Ciphertext hom_const_add(const KeyShape& shape, const Ciphertext& c, const BigInt& a) {
  require_shape(shape, c);
  if (bit_length(a) > static_cast<std::size_t>(shape.message_space_bits))
    throw Error(ErrorKind::ConstantTooLarge,
                "|a| must be < 2^" + std::to_string(shape.message_space_bits));
  const Ledger l = ledger_const_add(shape, ledger_of(c));
  Ciphertext out = c;
  for (BigInt& s : out.shares) s += a;
  out.mults_used = l.mults;
  out.adds_used = l.adds;
  out.const_ops_bits += static_cast<int>(bit_length(a));
  return out;
}

Ciphertext hom_const_mul(const KeyShape& shape, const Ciphertext& c, const BigInt& a) {
  require_shape(shape, c);
  if (bit_length(a) > static_cast<std::size_t>(shape.msg_bits))
    throw Error(ErrorKind::ConstantTooLarge,
                "|a| must be < 2^" + std::to_string(shape.msg_bits));
  const Ledger l = ledger_const_mul(shape, ledger_of(c));
  Ciphertext out = c;
  for (BigInt& s : out.shares) s *= a;
  out.mults_used = l.mults;
  out.adds_used = l.adds;
  out.const_ops_bits += static_cast<int>(bit_length(a));
  return out;
}

BigInt decode_centered(const SecretKey& key, const Plaintext& m) {
  if (2 * m.value <= key.u()) return m.value;
  return m.value - key.u();
}

}  // namespace mfhmrs
