// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/attacks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

namespace {

std::uint64_t checked_space(std::uint64_t per_axis, int axes) {
  std::uint64_t total = 1;
  for (int i = 0; i < axes; ++i) {
    if (per_axis != 0 && total > kExhaustiveTrialCap / per_axis)
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  "search space exceeds 2^24 assignments");
    total *= per_axis;
  }
  if (total > kExhaustiveTrialCap)
    throw Error(ErrorKind::SearchSpaceTooLarge, "search space exceeds 2^24 assignments");
  return total;
}

// The attacker knows the public sizes; 0 means unknown.
bool has_bits(const BigInt& x, int bits) {
  return bits <= 0 || bit_length(x) == static_cast<std::size_t>(bits);
}

// Is there x in [x_min, 2^x_bits) with (base + x*step) == target (mod modulus)
// and q = (base + x*step - target)/modulus in [0, 2^q_bits)?
bool representable(const BigInt& base, const BigInt& step, const BigInt& target,
                   const BigInt& modulus, int x_bits, const BigInt& x_min, int q_bits) {
  if (gcd(step, modulus) != 1) return false;
  const BigInt x_limit = pow2(static_cast<std::size_t>(x_bits));
  const BigInt q_limit = pow2(static_cast<std::size_t>(q_bits));
  BigInt x = floor_mod((target - base) * mod_inverse(floor_mod(step, modulus), modulus),
                       modulus);
  for (; x < x_limit; x += modulus) {
    if (x < x_min) continue;
    const BigInt value = base + x * step - target;
    const BigInt q = value / modulus;  // exact by construction
    if (q >= 0 && q < q_limit) return true;
  }
  return false;
}

}  // namespace

AttackReport kpa_gcd(std::span<const KnownPair> pairs) {
  AttackReport r;
  r.attack_name = "kpa-gcd";
  r.trials = 1;
  r.work_estimate_log2 = 0;
  if (pairs.size() < 2) {
    r.notes.emplace_back("need at least two known pairs");
    return r;
  }
  BigInt d = 0;
  BigInt largest_m = 0;
  for (const auto& pair : pairs) {
    d = gcd(d, pair.ciphertext_share - pair.plaintext);
    largest_m = std::max(largest_m, BigInt(abs(pair.plaintext)));
  }
  r.notes.push_back("gcd bits=" + std::to_string(bit_length(d)));
  if (d <= 1 || !is_probable_prime(d, 40)) {
    r.notes.emplace_back("gcd is not a prime");
    return r;
  }
  if (d <= largest_m) {
    r.notes.emplace_back("gcd does not exceed the known plaintexts");
    return r;
  }
  for (const auto& pair : pairs) {
    const BigInt q = (pair.ciphertext_share - pair.plaintext) / d;
    if (q < 0 || q >= d) {
      r.notes.emplace_back("quotient (c - m)/gcd outside [0, gcd)");
      return r;
    }
  }
  r.success = true;
  r.recovered["u"] = d;
  return r;
}

AttackReport kpa_gcd_on_mfhmrs(std::span<const KnownPair> pairs, const KeyShape& shape) {
  AttackReport r = kpa_gcd(pairs);
  r.attack_name = "kpa-gcd-mfhmrs";
  r.notes.push_back("target has " + std::to_string(shape.share_count) +
                    " reduced shares; share 1 used");
  return r;
}

double linear_u_p_work_log2(int g_bits, int u_bits, int p_bits) {
  return 4.0 * g_bits + 2.0 * (u_bits - p_bits) - 1.0;
}

AttackReport linear_search_u_p(std::span<const KnownPair> pairs, const LinearUpBounds& bounds) {
  AttackReport r;
  r.attack_name = "linear-u-p";
  r.work_estimate_log2 = linear_u_p_work_log2(bounds.g_bits, bounds.u_bits, bounds.p_bits);
  if (pairs.size() < 2)
    throw Error(ErrorKind::OutOfRange, "linear search needs at least two pairs");
  if (bounds.g_bits < 1 || bounds.k_bits < 0)
    throw Error(ErrorKind::OutOfRange, "bounds must be positive");
  if (bounds.g_bits > 24 || bounds.k_bits > 24)
    throw Error(ErrorKind::SearchSpaceTooLarge, "search space exceeds 2^24 assignments");
  const std::uint64_t g_count = (std::uint64_t{1} << bounds.g_bits) - 1;
  const std::uint64_t k_count = std::uint64_t{1} << bounds.k_bits;
  checked_space(g_count * k_count, 2);
  if (pairs.size() < 3) r.notes.emplace_back("no verification pair supplied");

  const BigInt e1 = pairs[0].ciphertext_share - pairs[0].plaintext;
  const BigInt e2 = pairs[1].ciphertext_share - pairs[1].plaintext;
  BigInt largest_share = 0;
  for (const auto& pair : pairs) largest_share = std::max(largest_share, pair.ciphertext_share);

  BigInt det, u_num, p_num, u, p;
  for (std::uint64_t g1 = 1; g1 <= g_count; ++g1) {
    for (std::uint64_t g2 = 1; g2 <= g_count; ++g2) {
      const BigInt g1b(static_cast<unsigned long>(g1));
      const BigInt g2b(static_cast<unsigned long>(g2));
      p_num = g1b * e2 - g2b * e1;
      for (std::uint64_t k1 = 0; k1 < k_count; ++k1) {
        for (std::uint64_t k2 = 0; k2 < k_count; ++k2) {
          ++r.trials;
          const BigInt k1b(static_cast<unsigned long>(k1));
          const BigInt k2b(static_cast<unsigned long>(k2));
          det = k1b * g2b - g1b * k2b;
          if (det == 0) continue;
          if (!mpz_divisible_p(p_num.get_mpz_t(), det.get_mpz_t())) continue;
          u_num = k1b * e2 - k2b * e1;
          if (!mpz_divisible_p(u_num.get_mpz_t(), det.get_mpz_t())) continue;
          u = u_num / det;
          p = p_num / det;
          if (u < 2 || p <= largest_share || p == u) continue;
          if (!has_bits(u, bounds.u_bits) || !has_bits(p, bounds.p_bits)) continue;
          if (!is_probable_prime(p, 40) || !is_probable_prime(u, 40)) continue;
          bool consistent = true;
          for (std::size_t i = 2; i < pairs.size() && consistent; ++i) {
            consistent = representable(pairs[i].plaintext, u, pairs[i].ciphertext_share, p,
                                       bounds.g_bits, BigInt(1), bounds.k_bits);
          }
          if (!consistent) continue;
          r.success = true;
          r.recovered["u"] = u;
          r.recovered["p1"] = p;
          return r;
        }
      }
    }
  }
  return r;
}

AttackReport close_g_gcd_leak(std::span<const BigInt, 4> zero_shares, const BigInt& u_bound) {
  AttackReport r;
  r.attack_name = "close-g";
  r.trials = 1;
  const BigInt first = zero_shares[0] - zero_shares[1];
  const BigInt second = zero_shares[2] - zero_shares[3];
  if (first == 0 || second == 0) {
    r.notes.emplace_back("a share difference is zero; gcd carries no information");
    return r;
  }
  const BigInt d = gcd(first, second);
  r.notes.push_back("gcd bits=" + std::to_string(bit_length(d)));
  if (d > u_bound && is_probable_prime(d, 40)) {
    r.success = true;
    r.recovered["u"] = d;
  }
  return r;
}

double linear_p_pair_work_log2(int g_bits, int u_bits, int p_bits) {
  return 4.0 * (g_bits + u_bits - p_bits) - 1.0;
}

AttackReport linear_search_p_pair(std::span<const SharePair> cts,
                                  const LinearPPairBounds& bounds) {
  AttackReport r;
  r.attack_name = "linear-p-pair";
  r.work_estimate_log2 =
      linear_p_pair_work_log2(bounds.g_bits, bounds.u_bits, bounds.p_bits);
  if (cts.size() < 4)
    throw Error(ErrorKind::OutOfRange, "need at least four ciphertexts");
  if (bounds.k_bits < 1) throw Error(ErrorKind::OutOfRange, "k_bits must be >= 1");
  if (bounds.k_bits > 12)
    throw Error(ErrorKind::SearchSpaceTooLarge, "search space exceeds 2^24 assignments");
  const std::int64_t limit = std::int64_t{1} << bounds.k_bits;
  const std::uint64_t per_axis = static_cast<std::uint64_t>(2 * limit - 1);
  checked_space(per_axis, 4);

  auto diff = [](const SharePair& s) { return BigInt(s.first - s.second); };
  BigInt largest_first = 0, largest_second = 0;
  for (const auto& s : cts) {
    largest_first = std::max(largest_first, s.first);
    largest_second = std::max(largest_second, s.second);
  }

  auto consistent = [&](const BigInt& p1, const BigInt& p2) {
    // c_i1 - c_i2 + k_i1 p1 = k_i2 p2
    for (const auto& s : cts) {
      if (!representable(diff(s), p1, BigInt(0), p2, bounds.k_bits, BigInt(0),
                         bounds.k_bits))
        return false;
    }
    return true;
  };

  // One pass over the k-differences for the equations built from (i, j) and (k, l).
  auto search = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const BigInt lhs_a = diff(cts[i]) - diff(cts[j]);
    const BigInt lhs_b = diff(cts[k]) - diff(cts[l]);
    BigInt det, n1, n2, p1, p2;
    for (std::int64_t a1 = -limit + 1; a1 < limit; ++a1) {
      for (std::int64_t a2 = -limit + 1; a2 < limit; ++a2) {
        for (std::int64_t b1 = -limit + 1; b1 < limit; ++b1) {
          for (std::int64_t b2 = -limit + 1; b2 < limit; ++b2) {
            ++r.trials;
            const std::int64_t d = -a1 * b2 + a2 * b1;
            if (d == 0) continue;
            det = static_cast<long>(d);
            n1 = lhs_a * static_cast<long>(b2) - lhs_b * static_cast<long>(a2);
            if (!mpz_divisible_p(n1.get_mpz_t(), det.get_mpz_t())) continue;
            n2 = lhs_a * static_cast<long>(b1) - lhs_b * static_cast<long>(a1);
            if (!mpz_divisible_p(n2.get_mpz_t(), det.get_mpz_t())) continue;
            p1 = n1 / det;
            p2 = n2 / det;
            if (p1 <= largest_first || p2 <= largest_second || p1 == p2) continue;
            if (!has_bits(p1, bounds.p_bits) || !has_bits(p2, bounds.p_bits)) continue;
            if (!is_probable_prime(p1, 40) || !is_probable_prime(p2, 40)) continue;
            if (!consistent(p1, p2)) continue;
            r.success = true;
            r.recovered["p1"] = p1;
            r.recovered["p2"] = p2;
            return true;
          }
        }
      }
    }
    return false;
  };

  // The planted k-differences can make a pairing singular; later ciphertexts
  // give other pairings to try.
  const std::size_t n = std::min<std::size_t>(cts.size(), 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          if (k == j || l == j) continue;
          if (search(i, j, k, l)) {
            r.notes.push_back("pairing (" + std::to_string(i) + "," + std::to_string(j) +
                              ") (" + std::to_string(k) + "," + std::to_string(l) + ")");
            return r;
          }
        }
  return r;
}

double bruteforce_keyspace(const SchemeParams& params, KeyspaceMode mode) {
  const double lp = prime_count_estimate(params.p_bits).log2_estimate;
  const double lu = prime_count_estimate(params.u_bits).log2_estimate;
  const double total = params.share_count() * lp + lu;
  return mode == KeyspaceMode::KnownPlaintext ? total - 1.0 : total;
}

double bruteforce_keyspace_n_plus_2(const SchemeParams& params, KeyspaceMode mode) {
  const double lp = prime_count_estimate(params.p_bits).log2_estimate;
  const double lu = prime_count_estimate(params.u_bits).log2_estimate;
  const double total = (params.max_mults + 2) * lp + lu;
  return mode == KeyspaceMode::KnownPlaintext ? total - 1.0 : total;
}

std::vector<AttackReport> run_trials(std::size_t count, unsigned jobs,
                                     const std::function<AttackReport(std::size_t)>& fn) {
  std::vector<AttackReport> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
  for (unsigned w = 0; w < n; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          results[i] = fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace mfhmrs
