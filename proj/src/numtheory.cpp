// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/numtheory.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {
    2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
    43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Sufficient for every n < 3.3e24, so certainly for n < 2^64.
constexpr std::array<unsigned, 12> kDeterministicWitnesses = {
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// One Miller-Rabin round; n odd > 3 with n - 1 = d * 2^s.
bool witness_passes(const BigInt& n, const BigInt& n_minus_1, const BigInt& d,
                    unsigned long s, const BigInt& a) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

int hex_digit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  return -1;
}

}  // namespace

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

BigInt floor_mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt centered_mod(const BigInt& x, const BigInt& m) {
  BigInt r = floor_mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

BigInt pow2(std::size_t exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

std::string to_hex(const BigInt& x) {
  BigInt mag = abs(x);
  return mag.get_str(16);
}

BigInt from_hex(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty hex value");
  if (text.size() > 1 && text.front() == '0')
    throw Error(ErrorKind::ParseError,
                "hex value has leading zeros: " + std::string(text));
  for (char ch : text) {
    if (hex_digit(ch) < 0)
      throw Error(ErrorKind::ParseError,
                  "not lowercase hex: " + std::string(text));
  }
  BigInt out;
  mpz_set_str(out.get_mpz_t(), std::string(text).c_str(), 16);
  return out;
}

BigInt random_bits(EntropySource& rng, std::size_t bits) {
  if (bits == 0) return 0;
  std::vector<std::uint8_t> buf((bits + 7) / 8);
  rng.fill(buf);
  BigInt out;
  mpz_import(out.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
  mpz_fdiv_r_2exp(out.get_mpz_t(), out.get_mpz_t(), bits);
  return out;
}

BigInt random_below(EntropySource& rng, const BigInt& bound) {
  if (bound <= 0)
    throw Error(ErrorKind::OutOfRange, "random_below needs a positive bound");
  if (bound == 1) return 0;
  const std::size_t bits = bit_length(BigInt(bound - 1));
  for (;;) {
    BigInt candidate = random_bits(rng, bits);
    if (candidate < bound) return candidate;
  }
}

BigInt random_exact_bits(EntropySource& rng, std::size_t bits) {
  if (bits == 0)
    throw Error(ErrorKind::OutOfRange, "exact bit length must be >= 1");
  return random_bits(rng, bits - 1) + pow2(bits - 1);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m < 2) throw Error(ErrorKind::OutOfRange, "modulus must be >= 2");
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorKind::NotInvertible,
                a.get_str() + " has no inverse modulo " + m.get_str());
  return floor_mod(r, m);
}

bool is_probable_prime(const BigInt& n, int rounds) {
  if (rounds < 1) throw Error(ErrorKind::OutOfRange, "rounds must be >= 1");
  if (n < 2) return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  // n > 97 and coprime to every small prime; 97^2 = 9409.
  if (n < 9409) return true;

  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  if (bit_length(n) <= 64) {
    for (unsigned w : kDeterministicWitnesses) {
      if (!witness_passes(n, n_minus_1, d, s, BigInt(w))) return false;
    }
    return true;
  }

  std::uint64_t state = mpz_get_ui(n.get_mpz_t()) ^ (bit_length(n) << 32);
  const BigInt span = n - 3;
  const std::size_t words = (bit_length(n) + 63) / 64 + 1;
  for (int round = 0; round < rounds; ++round) {
    BigInt raw = 0;
    for (std::size_t i = 0; i < words; ++i) {
      raw <<= 64;
      const std::uint64_t word = splitmix64(state);
      raw += BigInt(static_cast<unsigned long>(word >> 32)) << 32;
      raw += static_cast<unsigned long>(word & 0xffffffffULL);
    }
    const BigInt a = floor_mod(raw, span) + 2;  // a in [2, n-2]
    if (!witness_passes(n, n_minus_1, d, s, a)) return false;
  }
  return true;
}

BigInt gen_prime(std::size_t bits, EntropySource& rng) {
  if (bits < 2) throw Error(ErrorKind::OutOfRange, "prime bit length must be >= 2");
  if (bits == 2) return random_bits(rng, 1) + 2;
  for (;;) {
    BigInt candidate = random_exact_bits(rng, bits);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (is_probable_prime(candidate, 40)) return candidate;
  }
}

BigInt crt_reconstruct(std::span<const BigInt> residues,
                       std::span<const BigInt> moduli) {
  if (residues.size() != moduli.size() || moduli.empty())
    throw Error(ErrorKind::OutOfRange,
                "residues and moduli must have equal, non-zero length");
  for (const BigInt& m : moduli) {
    if (m < 2) throw Error(ErrorKind::OutOfRange, "each modulus must be >= 2");
  }
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    for (std::size_t j = i + 1; j < moduli.size(); ++j) {
      if (gcd(moduli[i], moduli[j]) != 1)
        throw Error(ErrorKind::ModuliNotCoprime,
                    moduli[i].get_str() + " and " + moduli[j].get_str());
    }
  }
  BigInt product = 1;
  for (const BigInt& m : moduli) product *= m;
  BigInt acc = 0;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const BigInt cofactor = product / moduli[i];
    const BigInt inv = mod_inverse(floor_mod(cofactor, moduli[i]), moduli[i]);
    acc += floor_mod(residues[i], moduli[i]) * cofactor * inv;
  }
  return floor_mod(acc, product);
}

BigInt prime_count_exact_bits(int l) {
  if (l < 1 || l > 24)
    throw Error(ErrorKind::OutOfRange, "sieve supports 1 <= l <= 24");
  const std::size_t hi = std::size_t{1} << l;
  const std::size_t lo = hi >> 1;
  std::vector<bool> composite(hi, false);
  std::size_t count = 0;
  for (std::size_t i = 2; i < hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) ++count;
    for (std::size_t j = i * i; j < hi; j += i) composite[j] = true;
  }
  return BigInt(static_cast<unsigned long>(count));
}

PrimeCountEstimate prime_count_estimate(int l) {
  if (l < 2) throw Error(ErrorKind::OutOfRange, "d_l needs l >= 2");
  PrimeCountEstimate out;
  out.bit_length = l;
  if (l <= 64) {
    // 2^l - 1 is exact in the 64-bit long double mantissa.
    const long double a = std::ldexp(1.0L, l) - 1.0L;
    const long double b = std::ldexp(1.0L, l - 1) - 1.0L;
    const long double second = (b == 1.0L) ? 0.0L : b / std::log(b);
    out.estimate = a / std::log(a) - second;
    out.log2_estimate = static_cast<double>(std::log2(out.estimate));
    return out;
  }
  // For l > 64, ln(2^l - 1) = l ln 2 to relative precision 2^-l, so
  // d_l = 2^(l-1)/ln 2 * (2/l - 1/(l-1)) up to terms below 2^-60 relative.
  const long double ln2 = std::log(2.0L);
  const long double ll = l;
  const long double factor = (2.0L / ll - 1.0L / (ll - 1.0L)) / ln2;
  out.log2_estimate = static_cast<double>((ll - 1.0L) + std::log2(factor));
  out.estimate = std::ldexp(factor, l - 1);
  return out;
}

}  // namespace mfhmrs
