// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"
#include "mfhmrs/entropy.hpp"
#include "mfhmrs/numtheory.hpp"
#include "support/error_check.hpp"
#include "support/oracles.hpp"

using namespace mfhmrs;

TEST_CASE("gcd examples and properties") {
  CHECK(gcd(606, 3535) == 101);
  CHECK(gcd(0, 17) == 17);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(0, 0) == 0);

  SeededEntropy rng(7);
  for (int i = 0; i < 500; ++i) {
    BigInt a = random_bits(rng, 90) - pow2(89);
    BigInt b = random_bits(rng, 70) - pow2(69);
    const BigInt g = gcd(a, b);
    CHECK(g >= 0);
    CHECK(g == gcd(b, a));
    CHECK(g == gcd(abs(a), abs(b)));
    if (g != 0) {
      CHECK(a % g == 0);
      CHECK(b % g == 0);
    }
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 11) == 4);
  CHECK(mod_inverse(1, 7) == 1);
  CHECK(mod_inverse(-3, 11) == 7);
  CHECK_THROWS_KIND(mod_inverse(6, 9), ErrorKind::NotInvertible);
  CHECK_THROWS_KIND(mod_inverse(3, 1), ErrorKind::OutOfRange);

  // Exhaustive against the definition for small moduli.
  for (int m = 2; m < 60; ++m)
    for (int a = 0; a < m; ++a) {
      if (std::gcd(a, m) != 1) continue;
      const BigInt x = mod_inverse(a, m);
      CHECK(x >= 0);
      CHECK(x < m);
      CHECK((a * x) % m == 1 % m);
    }
}

TEST_CASE("is_probable_prime against trial division") {
  CHECK_FALSE(is_probable_prime(2431, 40));
  CHECK(is_probable_prime(2, 1));
  CHECK_FALSE(is_probable_prime(1));
  CHECK_FALSE(is_probable_prime(0));
  CHECK_FALSE(is_probable_prime(-7));
  CHECK(is_probable_prime(pow2(127) - 1, 40));
  CHECK(mpz_probab_prime_p(BigInt(pow2(127) - 1).get_mpz_t(), 50) > 0);
  CHECK_FALSE(is_probable_prime(pow2(128) + 1, 40));  // F_7, composite

  for (std::uint64_t n = 0; n < 20000; ++n)
    REQUIRE(is_probable_prime(BigInt(static_cast<unsigned long>(n))) ==
            oracle::trial_division_prime(n));

  // Carmichael numbers and strong pseudoprimes to small bases.
  for (unsigned long n : {561UL, 1105UL, 1729UL, 2047UL, 3215031751UL, 3825123056546413051UL})
    CHECK_FALSE(is_probable_prime(BigInt(n)));

  // Large values against GMP's own test.
  SeededEntropy rng(11);
  for (int i = 0; i < 300; ++i) {
    const BigInt n = random_exact_bits(rng, 100 + static_cast<std::size_t>(i % 200)) | 1;
    CHECK(is_probable_prime(n) == (mpz_probab_prime_p(n.get_mpz_t(), 50) > 0));
  }
}

TEST_CASE("gen_prime") {
  SeededEntropy rng(3);
  for (int i = 0; i < 50; ++i) {
    const BigInt p = gen_prime(8, rng);
    CHECK(p >= 128);
    CHECK(p <= 255);
    CHECK(oracle::trial_division_prime(p.get_ui()));
  }
  for (int i = 0; i < 20; ++i) {
    const BigInt p = gen_prime(2, rng);
    CHECK((p == 2 || p == 3));
  }
  const auto primes16 = oracle::sieve_range(1u << 15, 1u << 16);
  for (int i = 0; i < 1000; ++i) {
    const BigInt p = gen_prime(16, rng);
    CHECK(std::binary_search(primes16.begin(), primes16.end(), static_cast<std::uint32_t>(p.get_ui())));
  }
  for (std::size_t bits : {17u, 64u, 65u, 130u, 256u}) {
    const BigInt p = gen_prime(bits, rng);
    CHECK(bit_length(p) == bits);
    CHECK(mpz_probab_prime_p(p.get_mpz_t(), 50) > 0);
  }
}

TEST_CASE("crt_reconstruct") {
  const std::vector<BigInt> m{11, 13, 17};
  CHECK(crt_reconstruct(std::vector<BigInt>{6, 4, 0}, m) == 17);
  CHECK(crt_reconstruct(std::vector<BigInt>{10, 10, 0}, m) == 153);
  CHECK(crt_reconstruct(std::vector<BigInt>{0}, std::vector<BigInt>{5}) == 0);
  CHECK(oracle::crt_scan({6, 4, 0}, {11, 13, 17}) == 17);
  CHECK(oracle::crt_scan({10, 10, 0}, {11, 13, 17}) == 153);
  CHECK_THROWS_KIND(crt_reconstruct(std::vector<BigInt>{1, 2}, std::vector<BigInt>{6, 9}),
                    ErrorKind::ModuliNotCoprime);
  CHECK_THROWS_KIND(crt_reconstruct(std::vector<BigInt>{1}, std::vector<BigInt>{6, 7}),
                    ErrorKind::OutOfRange);

  // Small exhaustive agreement with the scan.
  for (std::uint64_t a = 0; a < 11; ++a)
    for (std::uint64_t b = 0; b < 13; ++b) {
      const auto want = oracle::crt_scan({a, b, 5}, {11, 13, 7});
      CHECK(crt_reconstruct(std::vector<BigInt>{BigInt(static_cast<unsigned long>(a)),
                                                BigInt(static_cast<unsigned long>(b)), 5},
                            std::vector<BigInt>{11, 13, 7}) == want);
    }

  // Round trip: 10^4 trials with 3..6 moduli of 8..64 bits.
  SeededEntropy rng(5);
  std::mt19937_64 gen(5);
  for (int t = 0; t < 10000; ++t) {
    const int count = 3 + static_cast<int>(gen() % 4);
    std::vector<BigInt> moduli;
    while (static_cast<int>(moduli.size()) < count) {
      const BigInt p = gen_prime(8 + gen() % 57, rng);
      if (std::find(moduli.begin(), moduli.end(), p) == moduli.end()) moduli.push_back(p);
    }
    BigInt n = 1;
    for (const auto& q : moduli) n *= q;
    const BigInt x = random_below(rng, n);
    std::vector<BigInt> residues;
    for (const auto& q : moduli) residues.push_back(floor_mod(x, q));
    REQUIRE(crt_reconstruct(residues, moduli) == x);
  }
}

TEST_CASE("prime counts") {
  CHECK(prime_count_exact_bits(8) == 23);
  CHECK(prime_count_exact_bits(2) == 2);
  CHECK(prime_count_exact_bits(4) == 2);
  for (int l = 2; l <= 20; ++l)
    CHECK(prime_count_exact_bits(l) ==
          static_cast<unsigned long>(oracle::sieve_range(1u << (l - 1), 1u << l).size()));

  const auto d8 = prime_count_estimate(8);
  CHECK(static_cast<double>(d8.estimate) == doctest::Approx(oracle::kD8).epsilon(1e-12));
  CHECK(d8.log2_estimate == doctest::Approx(oracle::kLog2D8).epsilon(1e-12));
  CHECK(23.0 / static_cast<double>(d8.estimate) < 1.25);

  // Second term vanishes at l = 2: 3/ln 3.
  CHECK(static_cast<double>(prime_count_estimate(2).estimate) ==
        doctest::Approx(3.0 / std::log(3.0)).epsilon(1e-12));

  const auto d128 = prime_count_estimate(128);
  CHECK(d128.log2_estimate > 120);
  CHECK(d128.log2_estimate < 122);
  CHECK(d128.log2_estimate == doctest::Approx(oracle::kLog2D128).epsilon(1e-9));
  CHECK(prime_count_estimate(130).log2_estimate == doctest::Approx(oracle::kLog2D130).epsilon(1e-9));
  CHECK(prime_count_estimate(180).log2_estimate == doctest::Approx(oracle::kLog2D180).epsilon(1e-9));
  CHECK(prime_count_estimate(182).log2_estimate == doctest::Approx(oracle::kLog2D182).epsilon(1e-9));
  // Both evaluation paths meet at the switchover.
  for (int l : {60, 63, 64, 65, 66, 70}) {
    const double x = std::ldexp(1.0, l);
    const double direct = std::log2(x / std::log(x) - (x / 2) / std::log(x / 2));
    CHECK(prime_count_estimate(l).log2_estimate == doctest::Approx(direct).epsilon(1e-9));
  }
  CHECK(std::isfinite(prime_count_estimate(4096).log2_estimate));

  for (int l = 6; l <= 24; ++l) {
    const double exact = prime_count_exact_bits(l).get_d();
    const double est = static_cast<double>(prime_count_estimate(l).estimate);
    CHECK(exact / est < 1.3);
    CHECK(est / exact < 1.3);
  }
}

TEST_CASE("hex helpers are strict") {
  CHECK(to_hex(0) == "0");
  CHECK(to_hex(255) == "ff");
  CHECK(from_hex("ff") == 255);
  CHECK(from_hex("0") == 0);
  CHECK_THROWS_KIND(from_hex("FF"), ErrorKind::ParseError);
  CHECK_THROWS_KIND(from_hex("0f"), ErrorKind::ParseError);
  CHECK_THROWS_KIND(from_hex(""), ErrorKind::ParseError);
  CHECK_THROWS_KIND(from_hex("0x1"), ErrorKind::ParseError);
}

TEST_CASE("centered and floor mod") {
  CHECK(floor_mod(-1, 7) == 6);
  CHECK(centered_mod(6, 7) == -1);
  CHECK(centered_mod(3, 7) == 3);
  CHECK(centered_mod(4, 8) == 4);
  CHECK(centered_mod(-4, 8) == 4);
}
