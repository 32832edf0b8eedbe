// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/params.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

namespace {

constexpr int kMaxExtraShares = 64;
constexpr std::int64_t kUBitsScan = 1 << 16;

mpq_class lower_bound_lp(const SchemeParams& p) {
  const int shares = p.share_count();
  if (shares <= 0) return mpq_class(0);
  mpq_class bound = mpq_class(p.max_mults + 1, shares) *
                        (p.u_bits + p.g_bits + 1) +
                    mpq_class(p.max_adds, shares);
  bound.canonicalize();
  return bound;
}

}  // namespace

bool ParamReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ParamCheck& c) { return c.pass; });
}

std::vector<std::string> ParamReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

ParamReport validate(const SchemeParams& p) {
  ParamReport r;
  r.candidate = p;
  r.lp_lower = lower_bound_lp(p);
  r.lp_upper = mpq_class(p.u_bits + p.g_bits + 1);

  const mpq_class lp(p.p_bits);
  const mpq_class lu(p.u_bits);
  const mpq_class lg(p.g_bits);
  const mpq_class lambda(p.security_bits);
  mpq_class quarter_lambda(p.security_bits, 4);
  quarter_lambda.canonicalize();

  r.checks.push_back({"(N+1)/(N+S)·(l_u+l_g+1) + A/(N+S) ≤ l_p", r.lp_lower, lp,
                      p.share_count() > 0 && r.lp_lower <= lp});
  r.checks.push_back({"l_p ≤ l_u+l_g+1", lp, r.lp_upper, lp <= r.lp_upper});
  r.checks.push_back({"λ ≤ l_p", lambda, lp, lambda <= lp});
  r.checks.push_back({"l_p < l_u", lp, lu, lp < lu});
  r.checks.push_back({"l_g ≥ λ/4", lg, quarter_lambda, lg >= quarter_lambda});
  r.checks.push_back({"l_u > l_M", lu, mpq_class(p.message_space_bits()),
                      lu > p.message_space_bits()});
  // S admits some l_p: max(lower, lambda) <= min(l_u+l_g+1, l_u-1).
  const mpq_class lo = std::max(r.lp_lower, lambda);
  const mpq_class hi = std::min(r.lp_upper, mpq_class(p.u_bits - 1));
  r.checks.push_back({"S admits a feasible l_p", lo, hi,
                      p.extra_shares >= 1 && p.share_count() > 0 && lo <= hi});
  return r;
}

void require_valid(const SchemeParams& params) {
  const ParamReport report = validate(params);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "violated:";
  for (const auto& name : report.failures()) msg << " [" << name << "]";
  throw Error(ErrorKind::InvalidParams, msg.str());
}

SchemeParams suggest(int security_bits, int msg_bits, int max_mults, int max_adds) {
  if (security_bits < 8 || msg_bits < 1 || max_mults < 0 || max_adds < 0)
    throw Error(ErrorKind::InvalidParams,
                "advisor needs lambda >= 8, l_m >= 1, N >= 0, A >= 0");
  SchemeParams p;
  p.security_bits = security_bits;
  p.msg_bits = msg_bits;
  p.max_mults = max_mults;
  p.max_adds = max_adds;
  p.g_bits = (security_bits + 3) / 4 + 10;
  const std::int64_t l_M = p.message_space_bits();
  const std::int64_t u_start = l_M + 2;

  for (int s = 1; s <= kMaxExtraShares; ++s) {
    const std::int64_t shares = max_mults + s;
    for (std::int64_t lu = u_start; lu < u_start + kUBitsScan; ++lu) {
      const std::int64_t width = lu + p.g_bits + 1;  // l_u + l_g + 1
      const std::int64_t need = (max_mults + 1) * width + max_adds;
      // smallest l_p with shares*(l_p - 1) >= need + 1
      const std::int64_t lp_headroom = (need + 1 + shares - 1) / shares + 1;
      const std::int64_t lp = std::max<std::int64_t>(lp_headroom, security_bits);
      if (lp >= lu) continue;
      if (lp > width) continue;
      p.extra_shares = s;
      p.u_bits = static_cast<int>(lu);
      p.p_bits = static_cast<int>(lp);
      if (validate(p).ok()) return p;
    }
  }
  throw Error(ErrorKind::Infeasible,
              "no S <= 64 with l_u < l_M + 2 + 65536 admits an l_p satisfying "
              "both the correctness bound and l_p < l_u");
}

std::uint64_t ciphertext_bits(const SchemeParams& params) {
  return static_cast<std::uint64_t>(params.share_count()) *
         static_cast<std::uint64_t>(params.p_bits);
}

SchemeParams reference_params_set1() {
  return SchemeParams{128, 10, 1, 20, 2, 130, 42, 128};
}

SchemeParams reference_params_set2() {
  return SchemeParams{128, 10, 14, 30, 5, 182, 42, 180};
}

}  // namespace mfhmrs
