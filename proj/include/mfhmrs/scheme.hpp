// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "mfhmrs/entropy.hpp"
#include "mfhmrs/numtheory.hpp"
#include "mfhmrs/params.hpp"

namespace mfhmrs {

// n / p_i and its inverse modulo p_i.
struct CrtCofactor {
  BigInt cofactor;
  BigInt inverse;
};

// Secret primes p_1..p_{N+S}, u, and the precomputed CRT material. Immutable
// once assembled.
class SecretKey {
 public:
  // Structural checks only: share primes prime, pairwise distinct, u prime and
  // not a share prime, count equal to params.share_count(). Size relations are
  // keygen's job, so hand-built toy keys can be assembled.
  static SecretKey assemble(const SchemeParams& params,
                            std::vector<BigInt> share_primes, BigInt u,
                            bool legacy = false);

  const SchemeParams& params() const { return params_; }
  const std::vector<BigInt>& share_primes() const { return share_primes_; }
  const BigInt& u() const { return u_; }
  const BigInt& n() const { return n_; }
  const std::vector<CrtCofactor>& cofactors() const { return cofactors_; }
  bool legacy() const { return legacy_; }
  std::size_t share_count() const { return share_primes_.size(); }

 private:
  SecretKey() = default;

  SchemeParams params_;
  std::vector<BigInt> share_primes_;
  BigInt u_;
  BigInt n_;
  std::vector<CrtCofactor> cofactors_;
  bool legacy_ = false;
};

struct Plaintext {
  BigInt value;
};

struct Ciphertext {
  std::vector<BigInt> shares;
  int mults_used = 0;
  int adds_used = 0;
  // Total bit length of constants folded in by const-add / const-mul.
  int const_ops_bits = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// What the homomorphic operations need to know about a key: no secrets.
struct KeyShape {
  std::size_t share_count = 0;
  int max_mults = 0;
  int max_adds = 0;
  int msg_bits = 0;
  int message_space_bits = 0;

  static KeyShape of(const SecretKey& key);
};

// Budget bookkeeping, separated so callers can dry-run a circuit.
struct Ledger {
  int mults = 0;
  int adds = 0;
};
Ledger ledger_add(const KeyShape& shape, Ledger a, Ledger b);
Ledger ledger_mul(const KeyShape& shape, Ledger a, Ledger b);
Ledger ledger_const_add(const KeyShape& shape, Ledger a);
Ledger ledger_const_mul(const KeyShape& shape, Ledger a);

SecretKey keygen(const SchemeParams& params, EntropySource& rng);

// Draws primes at the requested sizes without checking the size constraints.
// For toy fixtures of attacks that only work on deliberately weak sizes.
SecretKey keygen_unchecked(const SchemeParams& params, EntropySource& rng);

Ciphertext encrypt(const SecretKey& key, const Plaintext& m, EntropySource& rng);

// Encrypts with caller-chosen randomness g (no size check on g). For test
// fixtures and attack demonstrations; not exposed by the CLI.
Ciphertext encrypt_with_randomness(const SecretKey& key, const Plaintext& m,
                                   const BigInt& g);

// Reduces each share into [0, p_i), CRT-reconstructs modulo n, lifts the result
// into (-n/2, n/2] and reduces modulo u. Result in [0, u).
Plaintext decrypt(const SecretKey& key, const Ciphertext& c);

// The CRT value before the final reduction modulo u, lifted into (-n/2, n/2].
BigInt reconstruct(const SecretKey& key, const Ciphertext& c);

Ciphertext hom_add(const KeyShape& shape, const Ciphertext& a, const Ciphertext& b);
Ciphertext hom_sub(const KeyShape& shape, const Ciphertext& a, const Ciphertext& b);
Ciphertext hom_mul(const KeyShape& shape, const Ciphertext& a, const Ciphertext& b);
// Share-wise negation; free with respect to the budget.
Ciphertext hom_negate(const Ciphertext& c);
// |a| < 2^l_M; one addition.
Ciphertext hom_const_add(const KeyShape& shape, const Ciphertext& c, const BigInt& a);
// |a| < 2^l_m; one multiplication.
Ciphertext hom_const_mul(const KeyShape& shape, const Ciphertext& c, const BigInt& a);

// m if m <= u/2, else m - u.
BigInt decode_centered(const SecretKey& key, const Plaintext& m);

}  // namespace mfhmrs
