// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/legacy.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

int LegacyParams::min_n_bits() const {
  return (max_mults + 1) * (2 * u_bits + 1) + max_adds + 1;
}

SchemeParams LegacyParams::as_scheme_params() const {
  SchemeParams p;
  p.security_bits = 0;
  p.msg_bits = msg_bits;
  p.max_mults = max_mults;
  p.max_adds = max_adds;
  p.extra_shares = 2 - max_mults;
  p.u_bits = u_bits;
  p.g_bits = u_bits;
  p.p_bits = p_bits();
  return p;
}

void require_valid(const LegacyParams& params) {
  std::vector<std::string> bad;
  const int l_M = (params.max_mults + 1) * params.msg_bits + params.max_adds;
  if (params.msg_bits < 1 || params.max_mults < 0 || params.max_adds < 0 ||
      params.u_bits < 2)
    bad.emplace_back("l_m ≥ 1, N ≥ 0, A ≥ 0, l_u ≥ 2");
  if (!(params.u_bits > l_M)) bad.emplace_back("l_u > l_M");
  const int l_n = params.resolved_n_bits();
  const int width = 2 * params.u_bits + 1;  // l_u + l_g + 1 with l_g = l_u
  if (!(l_n > (params.max_mults + 1) * width + params.max_adds))
    bad.emplace_back("l_n > (N+1)·(l_u+l_g+1) + A");
  if (!(params.p_bits() > width)) bad.emplace_back("l_p > l_u+l_g+1");
  if (bad.empty()) return;
  std::ostringstream msg;
  msg << "violated:";
  for (const auto& b : bad) msg << " [" << b << "]";
  throw Error(ErrorKind::InvalidParams, msg.str());
}

SecretKey legacy_keygen(const LegacyParams& params, EntropySource& rng) {
  require_valid(params);
  const auto lp = static_cast<std::size_t>(params.p_bits());
  const auto ln = static_cast<std::size_t>(params.resolved_n_bits());
  BigInt p, q;
  // n must reach l_n bits; with l_p = ceil(l_n/2) this can need a redraw.
  do {
    p = gen_prime(lp, rng);
    do {
      q = gen_prime(lp, rng);
    } while (q == p);
  } while (bit_length(BigInt(p * q)) < ln);
  BigInt u;
  do {
    u = gen_prime(static_cast<std::size_t>(params.u_bits), rng);
  } while (u <= pow2(static_cast<std::size_t>(params.as_scheme_params()
                                                    .message_space_bits())));
  return SecretKey::assemble(params.as_scheme_params(), {std::move(p), std::move(q)},
                             std::move(u), /*legacy=*/true);
}

SecretKey legacy_assemble(const LegacyParams& params, BigInt p, BigInt q, BigInt u) {
  if (u >= p || u >= q)
    throw Error(ErrorKind::InvalidParams, "legacy keys need u < p and u < q");
  return SecretKey::assemble(params.as_scheme_params(), {std::move(p), std::move(q)},
                             std::move(u), /*legacy=*/true);
}

bool legacy_share_exposes_value(const SecretKey& key, const Ciphertext& c) {
  (void)key;
  return c.shares.size() == 2 && c.shares[0] == c.shares[1];
}

}  // namespace mfhmrs
