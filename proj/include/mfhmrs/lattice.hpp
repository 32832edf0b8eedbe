// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "mfhmrs/numtheory.hpp"
#include "mfhmrs/params.hpp"

namespace mfhmrs {

using LatticeRow = std::vector<BigInt>;

// Square integer matrix; the rows span the lattice.
struct LatticeBasis {
  std::vector<LatticeRow> rows;

  std::size_t dimension() const { return rows.size(); }
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

inline const mpq_class kDefaultLllDelta{99, 100};

// Integral LLL (all Gram-Schmidt data kept as exact integer numerators over
// the Gram determinants d_i, so mu_ij = lambda_ij / d_j exactly). Output is
// size-reduced and satisfies the Lovasz condition for `delta` in (1/4, 1).
// Throws DegenerateBasis if the rows are dependent, OutOfRange on a bad delta
// or a non-square matrix.
LatticeBasis lll_reduce(const LatticeBasis& basis,
                        const mpq_class& delta = kDefaultLllDelta);

// Exact determinant (fraction-free Bareiss elimination).
BigInt determinant(const LatticeBasis& basis);

BigInt squared_norm(const LatticeRow& row);

// Samples c_0..c_t of one share index, optionally with the matching known
// plaintexts. scale_exponent is the exponent of the top-left entry; noise_bits
// bounds |r_i| in c_i = q_i * x + r_i for the secret x being sought (defaults
// to scale_exponent).
struct AcdInstance {
  std::vector<BigInt> samples;
  std::optional<std::vector<BigInt>> known_offsets;
  int scale_exponent = 0;
  std::optional<int> noise_bits;

  // c_i, or c_i - m_i in known-plaintext mode.
  std::vector<BigInt> adjusted_samples() const;
  int noise_bound_bits() const { return noise_bits.value_or(scale_exponent); }
};

struct UScaleGuess {
  int k_bits = 0;  // l_k
  int p_bits = 0;  // l_p
};
struct PScaleGuess {
  int u_bits = 0;
  int g_bits = 0;
};

// Row 0: (2^scale, c_1, ..., c_t); row i >= 1: -c_0 at column i, zero elsewhere.
LatticeBasis build_basis(const std::vector<BigInt>& samples, int scale_exponent);
// Scale 2^(l_k + l_p); offsets are subtracted first when present.
LatticeBasis build_basis_u(const AcdInstance& inst, UScaleGuess guess);
// Scale 2^(l_u + l_g).
LatticeBasis build_basis_p(const AcdInstance& inst, PScaleGuess guess);

struct FeasibilityReport {
  int t = 0;
  double k_bits = 0;            // l_k = l_g + l_u - l_p
  double target_norm_log2 = 0;  // planted vector
  double lll_bound_log2 = 0;    // sqrt((t+1)/(2 pi e)) * det^(1/(t+1))
  bool attack_feasible = false;
};

// Lattice B for recovering u. Follows the printed estimates, which take the
// samples' magnitude as 2^l_p.
FeasibilityReport feasibility(const SchemeParams& params, int t);
// Lattice B' for recovering p_1.
FeasibilityReport feasibility_p(const SchemeParams& params, int t);

// Reduces build_basis(adjusted samples, scale_exponent), reads g_0 off the
// first reduced row, sets r_0 = c_0 mod g_0 and u = (c_0 - r_0)/g_0. A
// candidate is returned only if it is prime, longer than noise_bits + 1, and
// every other sample sits within 2^noise_bits of a multiple of it.
std::optional<BigInt> recover_u(const AcdInstance& inst,
                                const mpq_class& delta = kDefaultLllDelta);

// Same pipeline on B' with k_0 in place of g_0; additionally the candidate must
// exceed every sample, since shares are residues modulo p_1.
std::optional<BigInt> recover_p(const AcdInstance& inst,
                                const mpq_class& delta = kDefaultLllDelta);

}  // namespace mfhmrs
