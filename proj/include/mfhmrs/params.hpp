// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace mfhmrs {

// Public size parameters of the scheme. All lengths are in bits.
struct SchemeParams {
  int security_bits = 0;  // lambda
  int msg_bits = 0;       // l_m, fresh plaintexts are < 2^msg_bits
  int max_mults = 0;      // N, consecutive multiplications supported
  int max_adds = 0;       // A, consecutive additions supported
  int extra_shares = 0;   // S; a ciphertext has N + S shares
  int u_bits = 0;         // l_u
  int g_bits = 0;         // l_g, encryption randomness
  int p_bits = 0;         // l_p, each share prime

  // l_M = (N+1)*l_m + A
  int message_space_bits() const { return (max_mults + 1) * msg_bits + max_adds; }
  int share_count() const { return max_mults + extra_shares; }

  friend bool operator==(const SchemeParams&, const SchemeParams&) = default;
};

struct ParamCheck {
  std::string name;
  mpq_class lhs;
  mpq_class rhs;
  bool pass = false;
};

struct ParamReport {
  SchemeParams candidate;
  std::vector<ParamCheck> checks;
  // [(N+1)/(N+S)*(l_u+l_g+1) + A/(N+S), l_u+l_g+1]
  mpq_class lp_lower;
  mpq_class lp_upper;

  bool ok() const;
  std::vector<std::string> failures() const;
};

// Evaluates every key-size constraint in exact rational arithmetic. Never
// throws; failures are reported in the checks.
ParamReport validate(const SchemeParams& params);

// Throws Error(InvalidParams) naming each violated constraint.
void require_valid(const SchemeParams& params);

// Smallest S, then smallest l_p, then smallest l_u, with l_g = ceil(lambda/4)
// + 10 and the l_u scan starting at l_M + 2. Besides passing validate(), l_p
// keeps one bit of headroom per share so that n > 2 * 2^((N+1)(l_u+l_g+1)+A)
// holds for every key drawn at these sizes (decryption lifts the CRT value
// into (-n/2, n/2]). Throws Error(Infeasible) if no S <= 64 works.
SchemeParams suggest(int security_bits, int msg_bits, int max_mults, int max_adds);

// (N+S) * l_p
std::uint64_t ciphertext_bits(const SchemeParams& params);

// The worked examples that accompany the constraint system.
SchemeParams reference_params_set1();  // lambda=128, l_m=10, N=1, A=20
SchemeParams reference_params_set2();  // lambda=128, l_m=10, N=14, A=30

}  // namespace mfhmrs
