// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mfhmrs/numtheory.hpp"
#include "mfhmrs/params.hpp"
#include "mfhmrs/scheme.hpp"

namespace mfhmrs {

// A known plaintext and one designated share of its ciphertext.
struct KnownPair {
  BigInt plaintext;
  BigInt ciphertext_share;
};

struct AttackReport {
  std::string attack_name;
  bool success = false;
  std::map<std::string, BigInt> recovered;  // "u", "p1", "p2", ...
  std::uint64_t trials = 0;
  double work_estimate_log2 = 0;
  std::vector<std::string> notes;
};

// Exhaustive searches refuse to enumerate more than this many assignments.
inline constexpr std::uint64_t kExhaustiveTrialCap = std::uint64_t{1} << 24;

// gcd of (c_i - m_i) over all pairs. Succeeds when the gcd d is a prime larger
// than every m_i and every quotient (c_i - m_i)/d lies in [0, d), as it must
// when the shares are the unreduced m + g*u with 0 < g < u.
AttackReport kpa_gcd(std::span<const KnownPair> pairs);

// The same pipeline pointed at the hardened scheme; expected to fail because
// shares are genuine residues modulo p_1.
AttackReport kpa_gcd_on_mfhmrs(std::span<const KnownPair> pairs, const KeyShape& shape);

struct LinearUpBounds {
  int g_bits = 0;  // enumerate g in [1, 2^g_bits)
  int k_bits = 0;  // enumerate k in [0, 2^k_bits)
  int u_bits = 0;  // public sizes: candidates must match; 0 skips the check
  int p_bits = 0;
};

// 4*l_g + 2*(l_u - l_p) - 1
double linear_u_p_work_log2(int g_bits, int u_bits, int p_bits);

// Solves c_i - m_i = g_i*u - k_i*p_j for (u, p_j) from pairs[0], pairs[1] over
// every (g_1, g_2, k_1, k_2) in bounds; every further pair must re-encrypt
// under the candidate with some g in range. Stops at the first survivor.
// Throws SearchSpaceTooLarge beyond kExhaustiveTrialCap.
AttackReport linear_search_u_p(std::span<const KnownPair> pairs, const LinearUpBounds& bounds);

// gcd(c_1 - c_2, c_3 - c_4) over four zero encryptions of one share index.
// Succeeds when the gcd is a prime above u_bound.
AttackReport close_g_gcd_leak(std::span<const BigInt, 4> zero_shares, const BigInt& u_bound);

// Share values of one ciphertext at share indices 1 and 2.
struct SharePair {
  BigInt first;
  BigInt second;
};

struct LinearPPairBounds {
  int k_bits = 0;  // |k differences| < 2^k_bits
  int g_bits = 0;  // for the work estimate only
  int u_bits = 0;
  int p_bits = 0;  // candidates must have this length; 0 skips the check
};

// 4*(l_g + l_u - l_p) - 1
double linear_p_pair_work_log2(int g_bits, int u_bits, int p_bits);

// From ciphertexts a, b, c, d forms
//   (c_a1 - c_a2) - (c_b1 - c_b2) = -(k_a1 - k_b1) p_1 + (k_a2 - k_b2) p_2
//   (c_c1 - c_c2) - (c_d1 - c_d2) = -(k_c1 - k_d1) p_1 + (k_c2 - k_d2) p_2
// and enumerates the four k-differences. Starts with (0,1),(2,3) and moves to
// other pairings of the first six ciphertexts while nothing is found. Every
// candidate must satisfy c_i1 - c_i2 = k_i2 p_2 - k_i1 p_1 with both k in
// [0, 2^k_bits) for all ciphertexts.
AttackReport linear_search_p_pair(std::span<const SharePair> ciphertexts,
                                  const LinearPPairBounds& bounds);

enum class KeyspaceMode { CiphertextOnly, KnownPlaintext };

// log2((d_lp)^(N+S) * d_lu), minus one bit for the known-plaintext average.
double bruteforce_keyspace(const SchemeParams& params, KeyspaceMode mode);
// The same with the exponent printed once as (N+2) instead of (N+S).
double bruteforce_keyspace_n_plus_2(const SchemeParams& params, KeyspaceMode mode);

// Runs fn(trial_index) for every index in [0, count) on up to `jobs` threads and
// returns results ordered by index.
std::vector<AttackReport> run_trials(std::size_t count, unsigned jobs,
                                     const std::function<AttackReport(std::size_t)>& fn);

}  // namespace mfhmrs
