// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

namespace {

BigInt dot(const LatticeRow& a, const LatticeRow& b) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void require_square(const LatticeBasis& basis) {
  for (const auto& row : basis.rows) {
    if (row.size() != basis.rows.size())
      throw Error(ErrorKind::OutOfRange, "lattice basis must be square");
  }
}

// Nearest integer to num/den, den > 0; ties round up.
BigInt round_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  BigInt twice = 2 * num + den;
  BigInt two_den = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), two_den.get_mpz_t());
  return q;
}

// State of the integral LLL (1-based, as in the classic presentation).
class IntegralLll {
 public:
  IntegralLll(const LatticeBasis& basis, const mpq_class& delta)
      : n_(basis.dimension()),
        delta_num_(delta.get_num()),
        delta_den_(delta.get_den()),
        b_(n_ + 1),
        d_(n_ + 1),
        lam_(n_ + 1, std::vector<BigInt>(n_ + 1)) {
    for (std::size_t i = 0; i < n_; ++i) b_[i + 1] = basis.rows[i];
  }

  LatticeBasis run() {
    if (n_ == 0) return {};
    d_[0] = 1;
    d_[1] = dot(b_[1], b_[1]);
    if (d_[1] == 0) degenerate();
    std::size_t k = 2;
    std::size_t k_max = 1;
    while (k <= n_) {
      if (k > k_max) {
        k_max = k;
        extend_gram_schmidt(k);
      }
      for (;;) {
        reduce(k, k - 1);
        const BigInt& lam = lam_[k][k - 1];
        const BigInt lhs = delta_den_ * d_[k] * d_[k - 2];
        const BigInt rhs = delta_num_ * d_[k - 1] * d_[k - 1] - delta_den_ * lam * lam;
        if (lhs < rhs) {
          swap(k, k_max);
          k = std::max<std::size_t>(2, k - 1);
          continue;
        }
        for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
        ++k;
        break;
      }
    }
    LatticeBasis out;
    out.rows.assign(b_.begin() + 1, b_.end());
    return out;
  }

 private:
  [[noreturn]] static void degenerate() {
    throw Error(ErrorKind::DegenerateBasis, "basis rows are linearly dependent");
  }

  void extend_gram_schmidt(std::size_t k) {
    for (std::size_t j = 1; j <= k; ++j) {
      BigInt u = dot(b_[k], b_[j]);
      for (std::size_t i = 1; i < j; ++i) {
        u = d_[i] * u - lam_[k][i] * lam_[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i - 1].get_mpz_t());
      }
      if (j < k) {
        lam_[k][j] = std::move(u);
      } else {
        if (u == 0) degenerate();
        d_[k] = std::move(u);
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * abs(lam_[k][l]) <= d_[l]) return;
    const BigInt q = round_div(lam_[k][l], d_[l]);
    for (std::size_t c = 0; c < n_; ++c) b_[k][c] -= q * b_[l][c];
    lam_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(std::size_t k, std::size_t k_max) {
    std::swap(b_[k], b_[k - 1]);
    for (std::size_t j = 1; j + 1 < k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const BigInt lam = lam_[k][k - 1];
    BigInt big_b = d_[k - 2] * d_[k] + lam * lam;
    mpz_divexact(big_b.get_mpz_t(), big_b.get_mpz_t(), d_[k - 1].get_mpz_t());
    for (std::size_t i = k + 1; i <= k_max; ++i) {
      const BigInt t = lam_[i][k];
      BigInt next = d_[k] * lam_[i][k - 1] - lam * t;
      mpz_divexact(next.get_mpz_t(), next.get_mpz_t(), d_[k - 1].get_mpz_t());
      lam_[i][k] = std::move(next);
      BigInt prev = big_b * t + lam * lam_[i][k];
      mpz_divexact(prev.get_mpz_t(), prev.get_mpz_t(), d_[k].get_mpz_t());
      lam_[i][k - 1] = std::move(prev);
    }
    d_[k - 1] = std::move(big_b);
  }

  std::size_t n_;
  BigInt delta_num_;
  BigInt delta_den_;
  std::vector<LatticeRow> b_;
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lam_;
};

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

// Reads the multiplier of 2^scale off the first coordinate of the first
// reduced row; when the coordinate is not an exact multiple, both neighbours.
std::vector<BigInt> multiplier_candidates(const LatticeBasis& reduced, int scale) {
  const BigInt lead = abs(reduced.rows.front().front());
  const BigInt unit = pow2(static_cast<std::size_t>(scale));
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lead.get_mpz_t(), unit.get_mpz_t());
  std::vector<BigInt> out;
  if (r == 0) {
    out.push_back(q);
  } else {
    out.push_back(q);
    out.push_back(q + 1);
  }
  return out;
}

bool all_equal(const std::vector<BigInt>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

// Every sample other than the first lies within 2^noise_bits of a multiple of x.
bool consistent_divisor(const BigInt& x, const std::vector<BigInt>& samples,
                        int noise_bits) {
  if (bit_length(x) <= static_cast<std::size_t>(noise_bits) + 1) return false;
  const BigInt bound = pow2(static_cast<std::size_t>(noise_bits));
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (abs(centered_mod(samples[i], x)) >= bound) return false;
  }
  return true;
}

std::optional<LatticeBasis> try_reduce(const LatticeBasis& basis, const mpq_class& delta) {
  try {
    return lll_reduce(basis, delta);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::DegenerateBasis) return std::nullopt;
    throw;
  }
}

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, const mpq_class& delta) {
  require_square(basis);
  if (!(delta > mpq_class(1, 4) && delta < 1))
    throw Error(ErrorKind::OutOfRange, "LLL delta must lie in (1/4, 1)");
  return IntegralLll(basis, delta).run();
}

BigInt determinant(const LatticeBasis& basis) {
  require_square(basis);
  const std::size_t n = basis.dimension();
  if (n == 0) return 1;
  std::vector<LatticeRow> m = basis.rows;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k] == 0) ++swap_with;
      if (swap_with == n) return 0;
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt squared_norm(const LatticeRow& row) { return dot(row, row); }

std::vector<BigInt> AcdInstance::adjusted_samples() const {
  std::vector<BigInt> out = samples;
  if (known_offsets) {
    if (known_offsets->size() != samples.size())
      throw Error(ErrorKind::OutOfRange, "one known plaintext per sample required");
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= (*known_offsets)[i];
  }
  return out;
}

LatticeBasis build_basis(const std::vector<BigInt>& samples, int scale_exponent) {
  if (samples.size() < 2)
    throw Error(ErrorKind::OutOfRange, "a lattice attack needs at least 2 samples");
  if (scale_exponent < 0)
    throw Error(ErrorKind::OutOfRange, "scale exponent must be non-negative");
  const std::size_t dim = samples.size();
  LatticeBasis basis;
  basis.rows.assign(dim, LatticeRow(dim, 0));
  basis.rows[0][0] = pow2(static_cast<std::size_t>(scale_exponent));
  for (std::size_t i = 1; i < dim; ++i) {
    basis.rows[0][i] = samples[i];
    basis.rows[i][i] = -samples[0];
  }
  return basis;
}

LatticeBasis build_basis_u(const AcdInstance& inst, UScaleGuess guess) {
  return build_basis(inst.adjusted_samples(), guess.k_bits + guess.p_bits);
}

LatticeBasis build_basis_p(const AcdInstance& inst, PScaleGuess guess) {
  return build_basis(inst.adjusted_samples(), guess.u_bits + guess.g_bits);
}

FeasibilityReport feasibility(const SchemeParams& params, int t) {
  if (t < 1) throw Error(ErrorKind::OutOfRange, "t must be >= 1");
  FeasibilityReport r;
  r.t = t;
  const double dim = t + 1.0;
  r.k_bits = double(params.g_bits) + params.u_bits - params.p_bits;
  r.target_norm_log2 = 0.5 * std::log2(dim) + params.g_bits + r.k_bits + params.p_bits;
  r.lll_bound_log2 = 0.5 * std::log2(dim / kTwoPiE) + params.p_bits + r.k_bits / dim;
  r.attack_feasible = r.target_norm_log2 < r.lll_bound_log2;
  return r;
}

FeasibilityReport feasibility_p(const SchemeParams& params, int t) {
  if (t < 1) throw Error(ErrorKind::OutOfRange, "t must be >= 1");
  FeasibilityReport r;
  r.t = t;
  const double dim = t + 1.0;
  r.k_bits = double(params.g_bits) + params.u_bits - params.p_bits;
  r.target_norm_log2 = 0.5 * std::log2(dim) + params.g_bits + r.k_bits + params.u_bits;
  r.lll_bound_log2 = 0.5 * std::log2(dim / kTwoPiE) + t * params.p_bits / dim +
                     (params.u_bits + params.g_bits) / dim;
  r.attack_feasible = r.target_norm_log2 < r.lll_bound_log2;
  return r;
}

std::optional<BigInt> recover_u(const AcdInstance& inst, const mpq_class& delta) {
  const std::vector<BigInt> c = inst.adjusted_samples();
  if (c.size() < 2 || all_equal(c)) return std::nullopt;
  const auto reduced = try_reduce(build_basis(c, inst.scale_exponent), delta);
  if (!reduced) return std::nullopt;
  for (const BigInt& g0 : multiplier_candidates(*reduced, inst.scale_exponent)) {
    if (g0 < 1) continue;
    const BigInt r0 = floor_mod(c[0], g0);
    const BigInt u = (c[0] - r0) / g0;
    if (u < 2 || !is_probable_prime(u, 40)) continue;
    if (consistent_divisor(u, c, inst.noise_bound_bits())) return u;
  }
  return std::nullopt;
}

std::optional<BigInt> recover_p(const AcdInstance& inst, const mpq_class& delta) {
  const std::vector<BigInt> c = inst.adjusted_samples();
  if (c.size() < 2 || all_equal(c)) return std::nullopt;
  const auto reduced = try_reduce(build_basis(c, inst.scale_exponent), delta);
  if (!reduced) return std::nullopt;
  const BigInt largest = *std::max_element(c.begin(), c.end());
  for (const BigInt& k0 : multiplier_candidates(*reduced, inst.scale_exponent)) {
    if (k0 < 1) continue;
    const BigInt r0 = floor_mod(c[0], k0);
    const BigInt p = abs(BigInt((c[0] - r0) / k0));
    if (p <= largest || !is_probable_prime(p, 40)) continue;
    if (consistent_divisor(p, c, inst.noise_bound_bits())) return p;
  }
  return std::nullopt;
}

}  // namespace mfhmrs
