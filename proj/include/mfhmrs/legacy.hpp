// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "mfhmrs/entropy.hpp"
#include "mfhmrs/scheme.hpp"

namespace mfhmrs {

// The original two-share scheme (p, q, u). Randomness is uniform in (0, u),
// so l_g = l_u. Shares are never actually reduced: l_p > l_u + l_g + 1.
struct LegacyParams {
  int msg_bits = 0;
  int max_mults = 0;
  int max_adds = 0;
  int u_bits = 0;
  int n_bits = 0;  // 0 selects the smallest admissible l_n

  // (N+1)*(2*l_u + 1) + A + 1
  int min_n_bits() const;
  int resolved_n_bits() const { return n_bits > 0 ? n_bits : min_n_bits(); }
  int p_bits() const { return (resolved_n_bits() + 1) / 2; }
  // Generic view: N + S == 2, lambda unused (0), l_g == l_u.
  SchemeParams as_scheme_params() const;
};

// Throws Error(InvalidParams) listing every violated inequality.
void require_valid(const LegacyParams& params);

SecretKey legacy_keygen(const LegacyParams& params, EntropySource& rng);

// Hand-picked (p, q, u) for fixtures; requires u < min(p, q).
SecretKey legacy_assemble(const LegacyParams& params, BigInt p, BigInt q, BigInt u);

// True iff both shares are equal, i.e. m + g*u survived reduction by both p
// and q untouched.
bool legacy_share_exposes_value(const SecretKey& key, const Ciphertext& c);

}  // namespace mfhmrs
