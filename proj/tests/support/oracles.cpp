// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> sieve_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<bool> composite(hi, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < hi; ++i) {
    if (composite[i]) continue;
    if (i >= lo) out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < hi; j += i) composite[j] = true;
  }
  return out;
}

std::uint64_t crt_scan(const std::vector<std::uint64_t>& residues,
                       const std::vector<std::uint64_t>& moduli) {
  std::uint64_t n = 1;
  for (auto m : moduli) n *= m;
  for (std::uint64_t x = 0; x < n; ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < moduli.size() && ok; ++i) ok = x % moduli[i] == residues[i];
    if (ok) return x;
  }
  throw std::logic_error("no CRT solution");
}

GramSchmidt gram_schmidt(const mfhmrs::LatticeBasis& b) {
  const std::size_t n = b.rows.size();
  const std::size_t m = n ? b.rows[0].size() : 0;
  std::vector<std::vector<mpq_class>> star(n, std::vector<mpq_class>(m));
  GramSchmidt gs;
  gs.mu.assign(n, std::vector<mpq_class>(n));
  gs.norm_sq.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < m; ++k) star[i][k] = b.rows[i][k];
    for (std::size_t j = 0; j < i; ++j) {
      mpq_class dot = 0;
      for (std::size_t k = 0; k < m; ++k) dot += mpq_class(b.rows[i][k]) * star[j][k];
      gs.mu[i][j] = dot / gs.norm_sq[j];
      for (std::size_t k = 0; k < m; ++k) star[i][k] -= gs.mu[i][j] * star[j][k];
    }
    for (std::size_t k = 0; k < m; ++k) gs.norm_sq[i] += star[i][k] * star[i][k];
  }
  return gs;
}

bool size_reduced(const GramSchmidt& gs) {
  const mpq_class half(1, 2);
  for (std::size_t i = 0; i < gs.mu.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(gs.mu[i][j]) > half) return false;
  return true;
}

bool lovasz(const GramSchmidt& gs, const mpq_class& delta) {
  for (std::size_t k = 1; k < gs.norm_sq.size(); ++k) {
    const mpq_class& mu = gs.mu[k][k - 1];
    if (gs.norm_sq[k] < (delta - mu * mu) * gs.norm_sq[k - 1]) return false;
  }
  return true;
}

BigInt shortest_vector_sq(const mfhmrs::LatticeBasis& b) {
  const std::size_t n = b.rows.size();
  const GramSchmidt gs = gram_schmidt(b);
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n));
  std::vector<long double> bsq(n);
  for (std::size_t i = 0; i < n; ++i) {
    bsq[i] = static_cast<long double>(gs.norm_sq[i].get_d());
    for (std::size_t j = 0; j < i; ++j) mu[i][j] = static_cast<long double>(gs.mu[i][j].get_d());
  }
  BigInt best = mfhmrs::squared_norm(b.rows[0]);
  for (const auto& row : b.rows) best = std::min(best, mfhmrs::squared_norm(row));
  // Small slack so float rounding never prunes the true minimum; every leaf is
  // re-evaluated exactly.
  long double radius = static_cast<long double>(best.get_d()) * (1.0L + 1e-9L);
  std::vector<long long> x(n, 0);
  const std::size_t m = b.rows[0].size();

  std::function<void(std::size_t, long double)> enumerate = [&](std::size_t level,
                                                                long double partial) {
    long double center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center -= static_cast<long double>(x[j]) * mu[j][level];
    const long double span = std::sqrt(std::max(0.0L, (radius - partial) / bsq[level]));
    const auto lo = static_cast<long long>(std::ceil(center - span));
    const auto hi = static_cast<long long>(std::floor(center + span));
    for (long long v = lo; v <= hi; ++v) {
      x[level] = v;
      const long double d = static_cast<long double>(v) - center;
      const long double next = partial + d * d * bsq[level];
      if (next > radius) continue;
      if (level > 0) {
        enumerate(level - 1, next);
        continue;
      }
      if (std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; })) continue;
      mfhmrs::LatticeRow vec(m, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) vec[k] += BigInt(static_cast<long>(x[i])) * b.rows[i][k];
      const BigInt sq = mfhmrs::squared_norm(vec);
      if (sq < best) {
        best = sq;
        radius = static_cast<long double>(best.get_d()) * (1.0L + 1e-9L);
      }
    }
    x[level] = 0;
  };
  enumerate(n - 1, 0);
  return best;
}

double coprime_rate(int k, int bits, int trials, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> draw(1, (std::uint64_t{1} << bits) - 1);
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    std::uint64_t g = 0;
    for (int i = 0; i < k; ++i) g = std::gcd(g, draw(gen));
    hits += g == 1;
  }
  return static_cast<double>(hits) / trials;
}

mfhmrs::SecretKey toy_key() {
  mfhmrs::SchemeParams p;
  p.security_bits = 4;
  p.msg_bits = 3;
  p.max_mults = 1;
  p.max_adds = 1;
  p.extra_shares = 2;
  p.u_bits = 3;
  p.g_bits = 2;
  p.p_bits = 4;
  return mfhmrs::SecretKey::assemble(p, {11, 13, 17}, 7);
}

namespace {

struct Node {
  std::string text;
  BigInt plain;
  mfhmrs::Ledger ledger;
};

bool fits(const mfhmrs::KeyShape& s, mfhmrs::Ledger l) {
  return l.mults <= s.max_mults && l.adds <= s.max_adds;
}

BigInt random_constant(int bits, std::mt19937_64& gen) {
  std::uniform_int_distribution<long> d(-((1L << bits) - 1), (1L << bits) - 1);
  return BigInt(d(gen));
}

std::string constant_text(const BigInt& k) {
  return k < 0 ? "(" + k.get_str() + ")" : k.get_str();
}

Node grow(const mfhmrs::KeyShape& s, const std::vector<BigInt>& in, std::mt19937_64& gen,
          int depth) {
  std::uniform_int_distribution<std::size_t> pick_var(0, in.size() - 1);
  std::uniform_int_distribution<int> pick_op(0, 7);
  const int op = depth <= 0 ? 0 : pick_op(gen);
  if (op == 0) {
    const std::size_t i = pick_var(gen);
    return {"c" + std::to_string(i + 1), in[i], {0, 0}};
  }
  const int cbits = std::min(s.msg_bits, 20);
  Node a = grow(s, in, gen, depth - 1);
  switch (op) {
    case 1:
    case 2:
    case 3: {
      Node b = grow(s, in, gen, depth - 1);
      mfhmrs::Ledger l{std::max(a.ledger.mults, b.ledger.mults), a.ledger.adds + b.ledger.adds + 1};
      if (op == 3) l = {a.ledger.mults + b.ledger.mults + 1, a.ledger.adds + b.ledger.adds};
      if (!fits(s, l)) return a;
      static const char* sym[] = {"", "+", "-", "*"};
      BigInt v = op == 1 ? BigInt(a.plain + b.plain)
                         : op == 2 ? BigInt(a.plain - b.plain) : BigInt(a.plain * b.plain);
      return {"(" + a.text + sym[op] + b.text + ")", v, l};
    }
    case 4: {  // x + k or x - k
      mfhmrs::Ledger l{a.ledger.mults, a.ledger.adds + 1};
      if (!fits(s, l)) return a;
      const BigInt k = random_constant(cbits, gen);
      if (gen() & 1) return {"(" + a.text + "+" + constant_text(k) + ")", a.plain + k, l};
      return {"(" + a.text + "-" + constant_text(k) + ")", a.plain - k, l};
    }
    case 5: {  // k - x
      mfhmrs::Ledger l{a.ledger.mults, a.ledger.adds + 1};
      if (!fits(s, l)) return a;
      const BigInt k = random_constant(cbits, gen);
      return {"(" + constant_text(k) + "-" + a.text + ")", k - a.plain, l};
    }
    case 6: {  // x * k or k * x
      mfhmrs::Ledger l{a.ledger.mults + 1, a.ledger.adds};
      if (!fits(s, l)) return a;
      const BigInt k = random_constant(cbits, gen);
      if (gen() & 1) return {"(" + a.text + "*" + constant_text(k) + ")", a.plain * k, l};
      return {"(" + constant_text(k) + "*" + a.text + ")", k * a.plain, l};
    }
    default:  // negation is free
      return {"(-" + a.text + ")", BigInt(-a.plain), a.ledger};
  }
}

}  // namespace

RandomCircuit random_circuit(const mfhmrs::KeyShape& shape, const std::vector<BigInt>& inputs,
                             std::mt19937_64& gen) {
  std::uniform_int_distribution<int> depth(1, 5);
  Node n = grow(shape, inputs, gen, depth(gen));
  return {n.text, n.plain};
}

}  // namespace oracle
