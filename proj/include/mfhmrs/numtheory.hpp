// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "mfhmrs/entropy.hpp"

namespace mfhmrs {

using BigInt = mpz_class;

// Number of bits in |x|; 0 for x == 0.
std::size_t bit_length(const BigInt& x);

// Floor modulus: result in [0, m) for m > 0.
BigInt floor_mod(const BigInt& x, const BigInt& m);

// Representative of x mod m in (-m/2, m/2].
BigInt centered_mod(const BigInt& x, const BigInt& m);

BigInt pow2(std::size_t exponent);

// Lowercase big-endian hex of |x| with no leading zeros ("0" for zero).
std::string to_hex(const BigInt& x);
// Strict inverse of to_hex for non-negative values; throws ParseError on any
// non-canonical spelling (uppercase, leading zeros, empty, prefix).
BigInt from_hex(std::string_view text);

// Uniform in [0, 2^bits).
BigInt random_bits(EntropySource& rng, std::size_t bits);
// Uniform in [0, bound), bound > 0.
BigInt random_below(EntropySource& rng, const BigInt& bound);
// Uniform among integers with exactly `bits` bits (top bit set), bits >= 1.
BigInt random_exact_bits(EntropySource& rng, std::size_t bits);

// Non-negative greatest common divisor; gcd(0, 0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);

// x in [0, m) with a*x == 1 (mod m). Throws NotInvertible when gcd(a, m) != 1
// and OutOfRange when m < 2.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// Miller-Rabin. Deterministic below 2^64 (fixed witness set); above that,
// `rounds` pseudo-random witnesses derived from n itself, so the result is a
// pure function of (n, rounds).
bool is_probable_prime(const BigInt& n, int rounds = 40);

// Probable prime with exactly `bits` bits. bits >= 2.
BigInt gen_prime(std::size_t bits, EntropySource& rng);

// Unique x in [0, prod(moduli)) with x == residues[i] mod moduli[i].
// Throws ModuliNotCoprime / OutOfRange on bad moduli or length mismatch.
BigInt crt_reconstruct(std::span<const BigInt> residues,
                       std::span<const BigInt> moduli);

// Exact number of primes in [2^(l-1), 2^l), by sieve. 1 <= l <= 24.
BigInt prime_count_exact_bits(int l);

struct PrimeCountEstimate {
  int bit_length = 0;
  long double estimate = 0;  // may be inf where long double has no room
  double log2_estimate = 0;
};

// d_l = (2^l - 1)/ln(2^l - 1) - (2^(l-1) - 1)/ln(2^(l-1) - 1), the
// approximate count of l-bit primes. At l = 2 the second denominator is ln 1;
// that term is taken as 0. l >= 2.
PrimeCountEstimate prime_count_estimate(int l);

}  // namespace mfhmrs
