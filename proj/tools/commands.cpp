// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string_view>

#include "json.hpp"

#include "mfhmrs/attacks.hpp"
#include "mfhmrs/circuit.hpp"
#include "mfhmrs/entropy.hpp"
#include "mfhmrs/error.hpp"
#include "mfhmrs/fileformat.hpp"
#include "mfhmrs/lattice.hpp"
#include "mfhmrs/legacy.hpp"
#include "mfhmrs/params.hpp"
#include "mfhmrs/scheme.hpp"

namespace mfhmrs::cli {

namespace {

using json = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams:
    case ErrorKind::Infeasible:
      return kExitInvalidParams;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ConstantTooLarge:
      return kExitBudget;
    case ErrorKind::ParseError:
    case ErrorKind::MessageTooLarge:
    case ErrorKind::OutOfRange:
    case ErrorKind::SearchSpaceTooLarge:
      return kExitMalformed;
    case ErrorKind::ShareCountMismatch:
      return kExitShareMismatch;
    default:
      return kExitFailure;
  }
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    std::cerr << "mfhmrs: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "mfhmrs: " << e.what() << '\n';
    return kExitFailure;
  }
}

std::vector<std::uint8_t> seed_bytes(std::string_view hex) {
  if (hex.empty()) throw Error(ErrorKind::ParseError, "--seed must be non-empty hex");
  std::vector<std::uint8_t> out;
  std::string padded(hex.size() % 2 ? "0" : "");
  padded += hex;
  for (std::size_t i = 0; i < padded.size(); i += 2) {
    unsigned v = 0;
    if (std::sscanf(padded.substr(i, 2).c_str(), "%2x", &v) != 1 ||
        !std::isxdigit(static_cast<unsigned char>(padded[i])) ||
        !std::isxdigit(static_cast<unsigned char>(padded[i + 1])))
      throw Error(ErrorKind::ParseError, "--seed is not hex: " + std::string(hex));
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

std::unique_ptr<EntropySource> make_rng(const std::optional<std::string>& seed) {
  if (!seed) return std::make_unique<OsEntropy>();
  std::cerr << "WARNING: --seed selects a DETERMINISTIC generator. Output is "
               "reproducible and NOT secret. Use only for test fixtures.\n";
  return std::make_unique<SeededEntropy>(seed_bytes(*seed));
}

// Per-trial generator: reproducible under --seed, OS entropy otherwise.
std::unique_ptr<EntropySource> trial_rng(const std::optional<std::string>& seed,
                                         std::size_t index) {
  if (!seed) return std::make_unique<OsEntropy>();
  auto bytes = seed_bytes(*seed);
  for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<std::uint8_t>(index >> (8 * i)));
  return std::make_unique<SeededEntropy>(bytes);
}

SchemeParams resolve_params(const SizeFlags& s) {
  SchemeParams p;
  if (s.preset) {
    if (*s.preset == 1)
      p = reference_params_set1();
    else if (*s.preset == 2)
      p = reference_params_set2();
    else
      throw Error(ErrorKind::ParseError, "--set must be 1 or 2");
  } else {
    if (!s.lambda || !s.lm || !s.N || !s.A)
      throw Error(ErrorKind::ParseError, "--lambda, --lm, --N and --A are required");
    // Explicit sizes override the advisor; a partial set fills in from it.
    if (s.S && s.lu && s.lg && s.lp)
      p = SchemeParams{*s.lambda, *s.lm, *s.N, *s.A, *s.S, *s.lu, *s.lg, *s.lp};
    else
      p = suggest(*s.lambda, *s.lm, *s.N, *s.A);
  }
  if (s.lambda) p.security_bits = *s.lambda;
  if (s.lm) p.msg_bits = *s.lm;
  if (s.N) p.max_mults = *s.N;
  if (s.A) p.max_adds = *s.A;
  if (s.S) p.extra_shares = *s.S;
  if (s.lu) p.u_bits = *s.lu;
  if (s.lg) p.g_bits = *s.lg;
  if (s.lp) p.p_bits = *s.lp;
  return p;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", q.get_d());
  return q.get_str() + " (~" + buf + ")";
}

std::string params_line(const SchemeParams& p) {
  std::ostringstream os;
  os << "lambda=" << p.security_bits << " lm=" << p.msg_bits << " N=" << p.max_mults
     << " A=" << p.max_adds << " S=" << p.extra_shares << " lu=" << p.u_bits
     << " lg=" << p.g_bits << " lp=" << p.p_bits;
  return os.str();
}

json params_json(const SchemeParams& p) {
  return json{{"lambda", p.security_bits}, {"lm", p.msg_bits}, {"N", p.max_mults},
              {"A", p.max_adds},           {"S", p.extra_shares}, {"lu", p.u_bits},
              {"lg", p.g_bits},            {"lp", p.p_bits}};
}

void print_report(const ParamReport& r, Format format) {
  if (format == Format::Json) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name},
                        {"lhs", c.lhs.get_str()},
                        {"rhs", c.rhs.get_str()},
                        {"pass", c.pass}});
    json out{{"params", params_json(r.candidate)},
             {"message_space_bits", r.candidate.message_space_bits()},
             {"lp_range", {r.lp_lower.get_str(), r.lp_upper.get_str()}},
             {"checks", checks},
             {"ok", r.ok()}};
    std::cout << out.dump(2) << '\n';
    return;
  }
  std::cout << "params     " << params_line(r.candidate) << '\n'
            << "l_M        " << r.candidate.message_space_bits() << '\n'
            << "l_p range  [" << rational_str(r.lp_lower) << ", "
            << rational_str(r.lp_upper) << "]\n";
  for (const auto& c : r.checks) {
    std::printf("  %-4s  %-44s  %s vs %s\n", c.pass ? "ok" : "FAIL", c.name.c_str(),
                rational_str(c.lhs).c_str(), rational_str(c.rhs).c_str());
  }
  std::cout << "result     " << (r.ok() ? "valid" : "INVALID") << '\n';
}

int report_failures(const ParamReport& r) {
  std::string names;
  for (const auto& f : r.failures()) names += " [" + f + "]";
  std::cerr << "mfhmrs: InvalidParams: violated" << names << '\n';
  return kExitInvalidParams;
}

SecretKey load_key(const std::string& path) { return parse_key(read_text_file(path)); }

BigInt parse_decimal(std::string_view text, const char* what) {
  BigInt v;
  const std::string s(text);
  if (s.empty() || v.set_str(s, 10) != 0)
    throw Error(ErrorKind::ParseError, std::string(what) + " is not a decimal integer: " + s);
  return v;
}

std::string fmt2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

void print_feasibility(const char* lattice, const FeasibilityReport& f, Format format,
                       json* sink) {
  if (format == Format::Json) {
    (*sink)["feasibility"] = {{"lattice", lattice},
                              {"t", f.t},
                              {"k_bits", f.k_bits},
                              {"target_norm_log2", f.target_norm_log2},
                              {"lll_bound_log2", f.lll_bound_log2},
                              {"attack_feasible", f.attack_feasible}};
    return;
  }
  std::cout << "feasibility " << lattice << " t=" << f.t << '\n'
            << "  l_k                " << fmt2(f.k_bits) << '\n'
            << "  log2 |v|           " << fmt2(f.target_norm_log2) << '\n'
            << "  log2 LLL bound     " << fmt2(f.lll_bound_log2) << '\n'
            << "  feasible           " << (f.attack_feasible ? "yes" : "no") << '\n';
}

void print_attack(const AttackReport& r, Format format, json* sink) {
  if (format == Format::Json) {
    json rec = json::object();
    for (const auto& [k, v] : r.recovered) rec[k] = to_hex(v);
    (*sink)["report"] = {{"attack", r.attack_name},
                         {"success", r.success},
                         {"trials", r.trials},
                         {"work_log2", r.work_estimate_log2},
                         {"recovered", rec},
                         {"notes", r.notes}};
    return;
  }
  std::cout << "attack     " << r.attack_name << '\n'
            << "success    " << (r.success ? "yes" : "no") << '\n'
            << "trials     " << r.trials << '\n'
            << "work log2  " << fmt2(r.work_estimate_log2) << '\n';
  for (const auto& [k, v] : r.recovered) std::cout << "recovered  " << k << " = 0x" << to_hex(v) << '\n';
  for (const auto& n : r.notes) std::cout << "note       " << n << '\n';
  // Machine-readable summary.
  std::cout << "report attack=" << r.attack_name << " success=" << (r.success ? 1 : 0)
            << " trials=" << r.trials << " work_log2=" << fmt2(r.work_estimate_log2);
  for (const auto& [k, v] : r.recovered) std::cout << ' ' << k << "=0x" << to_hex(v);
  std::cout << '\n';
}

// Aggregate of per-trial reports: success iff every trial succeeded.
AttackReport summarize(const std::string& name, const std::vector<AttackReport>& runs,
                       std::size_t wrong) {
  AttackReport r;
  r.attack_name = name;
  r.trials = runs.size();
  std::size_t ok = 0;
  for (const auto& run : runs) ok += run.success;
  r.success = !runs.empty() && ok == runs.size();
  if (!runs.empty()) r.work_estimate_log2 = runs.front().work_estimate_log2;
  if (runs.size() == 1) {
    r.recovered = runs.front().recovered;
    r.notes = runs.front().notes;
  }
  r.notes.push_back("successes=" + std::to_string(ok) + "/" + std::to_string(runs.size()));
  r.notes.push_back("wrong_recoveries=" + std::to_string(wrong));
  return r;
}

BigInt random_message(const SchemeParams& p, EntropySource& rng) {
  return random_bits(rng, static_cast<std::size_t>(p.msg_bits));
}

// Lines "m c" (known pairs) or "c" (samples); decimal or 0x-hex, '#' comments.
struct SampleFile {
  std::vector<BigInt> samples;
  std::vector<BigInt> plaintexts;
};

BigInt parse_number(const std::string& tok) {
  BigInt v;
  bool neg = !tok.empty() && tok[0] == '-';
  std::string body = neg ? tok.substr(1) : tok;
  int rc;
  if (body.rfind("0x", 0) == 0)
    rc = v.set_str(body.substr(2), 16);
  else
    rc = v.set_str(body, 10);
  if (body.empty() || rc != 0) throw Error(ErrorKind::ParseError, "bad number: " + tok);
  return neg ? BigInt(-v) : v;
}

SampleFile read_samples(const std::string& path) {
  std::istringstream in(read_text_file(path));
  SampleFile f;
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> width;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks.size() > 2 || (width && *width != toks.size()))
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(lineno) + ": expected 'c' or 'm c' on every line");
    width = toks.size();
    if (toks.size() == 2) f.plaintexts.push_back(parse_number(toks[0]));
    f.samples.push_back(parse_number(toks.back()));
  }
  if (f.samples.size() < 2) throw Error(ErrorKind::ParseError, "need at least two samples");
  return f;
}

const SecretKey& need_key(const std::optional<SecretKey>& key, const std::string& mode) {
  if (!key) throw Error(ErrorKind::ParseError, "attack " + mode + " needs --key");
  return *key;
}

int attack_kpa_gcd(const AttackOptions& opt, const std::optional<SecretKey>& key, json* out) {
  if (opt.samples) {
    const auto f = read_samples(*opt.samples);
    if (f.plaintexts.empty())
      throw Error(ErrorKind::ParseError, "kpa-gcd samples need 'm c' lines");
    std::vector<KnownPair> pairs;
    for (std::size_t i = 0; i < f.samples.size(); ++i)
      pairs.push_back({f.plaintexts[i], f.samples[i]});
    print_attack(kpa_gcd(pairs), opt.format, out);
    return kExitOk;
  }
  const SecretKey& k = need_key(key, "kpa-gcd");
  if (opt.pairs < 2) throw Error(ErrorKind::OutOfRange, "--pairs must be at least 2");
  const KeyShape shape = KeyShape::of(k);
  std::atomic<std::size_t> wrong{0};
  const auto runs = run_trials(static_cast<std::size_t>(opt.trials), opt.jobs, [&](std::size_t i) {
    auto rng = trial_rng(opt.seed, i);
    std::vector<KnownPair> pairs;
    for (int j = 0; j < opt.pairs; ++j) {
      const BigInt m = random_message(k.params(), *rng);
      pairs.push_back({m, encrypt(k, Plaintext{m}, *rng).shares.front()});
    }
    AttackReport r = k.legacy() ? kpa_gcd(pairs) : kpa_gcd_on_mfhmrs(pairs, shape);
    if (r.success && r.recovered.at("u") != k.u()) {
      ++wrong;
      r.success = false;
    }
    return r;
  });
  print_attack(summarize("kpa-gcd", runs, wrong), opt.format, out);
  return kExitOk;
}

int attack_lattice(const AttackOptions& opt, const std::optional<SecretKey>& key, bool for_u,
                   json* out) {
  const char* name = for_u ? "lattice-u" : "lattice-p";
  if (opt.t < 1) throw Error(ErrorKind::OutOfRange, "--t must be at least 1");
  if (opt.samples) {
    if (!opt.scale) throw Error(ErrorKind::ParseError, "--samples needs --scale");
    const auto f = read_samples(*opt.samples);
    AcdInstance inst;
    inst.samples = f.samples;
    if (!f.plaintexts.empty()) inst.known_offsets = f.plaintexts;
    inst.scale_exponent = *opt.scale;
    const auto found = for_u ? recover_u(inst) : recover_p(inst);
    AttackReport r;
    r.attack_name = name;
    r.trials = 1;
    r.success = found.has_value();
    if (found) r.recovered[for_u ? "u" : "p1"] = *found;
    print_attack(r, opt.format, out);
    return kExitOk;
  }
  const SecretKey& k = need_key(key, name);
  const SchemeParams& p = k.params();
  if (!k.legacy()) {
    print_feasibility(for_u ? "B" : "B'", for_u ? feasibility(p, opt.t) : feasibility_p(p, opt.t),
                      opt.format, out);
  }
  const int k_bits = std::max(0, p.g_bits + p.u_bits - p.p_bits);
  // Unreduced shares (l_k <= 0) carry only the message as noise.
  const int default_scale =
      for_u ? (k_bits == 0 ? p.msg_bits : k_bits + p.p_bits) : p.u_bits + p.g_bits;
  const int scale = opt.scale.value_or(default_scale);
  std::atomic<std::size_t> wrong{0};
  const BigInt& truth = for_u ? k.u() : k.share_primes().front();
  const auto runs = run_trials(static_cast<std::size_t>(opt.trials), opt.jobs, [&](std::size_t i) {
    auto rng = trial_rng(opt.seed, i);
    AcdInstance inst;
    std::vector<BigInt> ms;
    for (int j = 0; j <= opt.t; ++j) {
      const BigInt m = random_message(p, *rng);
      ms.push_back(m);
      inst.samples.push_back(encrypt(k, Plaintext{m}, *rng).shares.front());
    }
    if (opt.known_plaintext) inst.known_offsets = ms;
    inst.scale_exponent = scale;
    AttackReport r;
    r.attack_name = name;
    r.trials = 1;
    const auto found = for_u ? recover_u(inst) : recover_p(inst);
    if (found) {
      r.recovered[for_u ? "u" : "p1"] = *found;
      r.success = *found == truth;
      if (!r.success) ++wrong;
    }
    r.notes.push_back("scale=2^" + std::to_string(scale) + " samples=" + std::to_string(opt.t + 1));
    return r;
  });
  print_attack(summarize(name, runs, wrong), opt.format, out);
  return kExitOk;
}

// Toy instance for the two linear searches: three shares, l_m = 2.
SecretKey toy_linear_key(int g_bits, int u_bits, int p_bits, EntropySource& rng) {
  SchemeParams p;
  p.msg_bits = 2;
  p.max_mults = 1;
  p.extra_shares = 2;
  p.u_bits = u_bits;
  p.g_bits = g_bits;
  p.p_bits = p_bits;
  return keygen_unchecked(p, rng);
}

int attack_linear(const AttackOptions& opt, json* out) {
  if (opt.g_bits < 2 || opt.g_bits > 4)
    throw Error(ErrorKind::OutOfRange, "--lg must be in [2, 4] for the toy fixture");
  auto rng = make_rng(opt.seed);
  const int lg = opt.g_bits;

  // (u, p_1) from two known pairs of share 1.
  {
    const int lu = 31, lp = 30;
    const SecretKey k = toy_linear_key(lg, lu, lp, *rng);
    std::vector<KnownPair> pairs;
    for (int j = 0; j < 6; ++j) {
      const BigInt m = random_message(k.params(), *rng);
      pairs.push_back({m, encrypt(k, Plaintext{m}, *rng).shares.front()});
    }
    LinearUpBounds b{lg, lg + lu - lp + 1, lu, lp};
    AttackReport r = linear_search_u_p(pairs, b);
    if (r.success)
      r.success = r.recovered.at("u") == k.u() && r.recovered.at("p1") == k.share_primes()[0];
    r.notes.push_back("planted u=0x" + to_hex(k.u()) + " p1=0x" + to_hex(k.share_primes()[0]));
    json part;
    print_attack(r, opt.format, &part);
    if (opt.format == Format::Json) (*out)["u_p"] = part["report"];
  }
  // (p_1, p_2) from share differences across ciphertexts.
  {
    const int lu = 30, lp = 31;
    const SecretKey k = toy_linear_key(lg, lu, lp, *rng);
    std::vector<SharePair> cts;
    for (int j = 0; j < 10; ++j) {
      const auto c = encrypt(k, Plaintext{random_message(k.params(), *rng)}, *rng);
      cts.push_back({c.shares[0], c.shares[1]});
    }
    LinearPPairBounds b{std::max(1, lg + lu - lp + 1), lg, lu, lp};
    AttackReport r = linear_search_p_pair(cts, b);
    if (r.success)
      r.success = r.recovered.at("p1") == k.share_primes()[0] &&
                  r.recovered.at("p2") == k.share_primes()[1];
    r.notes.push_back("planted p1=0x" + to_hex(k.share_primes()[0]) +
                      " p2=0x" + to_hex(k.share_primes()[1]));
    json part;
    print_attack(r, opt.format, &part);
    if (opt.format == Format::Json) (*out)["p_pair"] = part["report"];
  }
  return kExitOk;
}

int attack_close_g(const AttackOptions& opt, const std::optional<SecretKey>& key, json* out) {
  const SecretKey& k = need_key(key, "close-g");
  const BigInt bound = pow2(static_cast<std::size_t>(k.params().message_space_bits()));
  std::atomic<std::size_t> wrong{0};
  const auto runs = run_trials(static_cast<std::size_t>(opt.trials), opt.jobs, [&](std::size_t i) {
    auto rng = trial_rng(opt.seed, i);
    std::array<BigInt, 4> zeros;
    for (auto& z : zeros) z = encrypt(k, Plaintext{0}, *rng).shares.front();
    AttackReport r = close_g_gcd_leak(std::span<const BigInt, 4>(zeros), bound);
    if (r.success && r.recovered.at("u") != k.u()) {
      ++wrong;
      r.success = false;
    }
    return r;
  });
  print_attack(summarize("close-g", runs, wrong), opt.format, out);
  return kExitOk;
}

double percentile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size()))) - 1;
  return v[std::min(idx, v.size() - 1)];
}

}  // namespace

int cmd_keygen(const KeygenOptions& opt) {
  return guarded([&] {
    auto rng = make_rng(opt.seed);
    if (opt.legacy) {
      const auto& s = opt.sizes;
      if (!s.lm || !s.N || !s.A)
        throw Error(ErrorKind::ParseError, "--legacy needs --lm, --N and --A");
      LegacyParams lp;
      lp.msg_bits = *s.lm;
      lp.max_mults = *s.N;
      lp.max_adds = *s.A;
      lp.u_bits = s.lu.value_or(lp.as_scheme_params().message_space_bits() + 2);
      lp.n_bits = opt.ln.value_or(0);
      require_valid(lp);
      const SecretKey key = legacy_keygen(lp, *rng);
      write_text_file(opt.out, serialize_key(key));
      if (opt.format == Format::Json) {
        std::cout << json{{"legacy", true},
                          {"lm", lp.msg_bits},
                          {"N", lp.max_mults},
                          {"A", lp.max_adds},
                          {"lu", lp.u_bits},
                          {"ln", lp.resolved_n_bits()},
                          {"lp", lp.p_bits()}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "legacy     lm=" << lp.msg_bits << " N=" << lp.max_mults
                  << " A=" << lp.max_adds << " lu=" << lp.u_bits
                  << " ln=" << lp.resolved_n_bits() << " lp=" << lp.p_bits() << '\n';
      }
      return kExitOk;
    }
    const SchemeParams params = resolve_params(opt.sizes);
    const ParamReport report = validate(params);
    print_report(report, opt.format);
    if (!report.ok()) return report_failures(report);
    const SecretKey key = keygen(params, *rng);
    write_text_file(opt.out, serialize_key(key));
    return kExitOk;
  });
}

int cmd_encrypt(const EncryptOptions& opt) {
  return guarded([&] {
    const SecretKey key = load_key(opt.key);
    auto rng = make_rng(opt.seed);
    const BigInt m = parse_decimal(opt.message, "message");
    write_text_file(opt.out, serialize_ciphertext(encrypt(key, Plaintext{m}, *rng)));
    return kExitOk;
  });
}

int cmd_decrypt(const DecryptOptions& opt) {
  return guarded([&] {
    const SecretKey key = load_key(opt.key);
    const Ciphertext c = parse_ciphertext(read_text_file(opt.in));
    const Plaintext m = decrypt(key, c);
    std::cout << m.value.get_str() << '\n';
    if (opt.centered) std::cout << decode_centered(key, m).get_str() << '\n';
    return kExitOk;
  });
}

int cmd_eval(const EvalOptions& opt) {
  return guarded([&] {
    const SecretKey key = load_key(opt.key);
    const KeyShape shape = KeyShape::of(key);
    const Circuit circuit = Circuit::parse(opt.circuit);
    if (circuit.variable_count() > opt.inputs.size())
      throw Error(ErrorKind::ParseError,
                  "circuit references c" + std::to_string(circuit.variable_count()) + " but only " +
                      std::to_string(opt.inputs.size()) + " --in given");
    std::vector<Ciphertext> inputs;
    std::vector<Ledger> ledgers;
    for (const auto& path : opt.inputs) {
      inputs.push_back(parse_ciphertext(read_text_file(path)));
      ledgers.push_back({inputs.back().mults_used, inputs.back().adds_used});
    }
    circuit.check_budget(shape, ledgers);
    write_text_file(opt.out, serialize_ciphertext(circuit.evaluate(shape, inputs)));
    return kExitOk;
  });
}

int cmd_attack(const AttackOptions& opt) {
  return guarded([&] {
    if (opt.trials < 1) throw Error(ErrorKind::OutOfRange, "--trials must be at least 1");
    std::optional<SecretKey> key;
    if (opt.key) key.emplace(load_key(*opt.key));
    json out = json::object();
    int rc;
    if (opt.mode == "kpa-gcd")
      rc = attack_kpa_gcd(opt, key, &out);
    else if (opt.mode == "lattice-u")
      rc = attack_lattice(opt, key, true, &out);
    else if (opt.mode == "lattice-p")
      rc = attack_lattice(opt, key, false, &out);
    else if (opt.mode == "linear")
      rc = attack_linear(opt, &out);
    else if (opt.mode == "close-g")
      rc = attack_close_g(opt, key, &out);
    else
      throw Error(ErrorKind::ParseError, "unknown attack mode: " + opt.mode);
    if (opt.format == Format::Json) std::cout << out.dump(2) << '\n';
    return rc;
  });
}

int cmd_estimate(const EstimateOptions& opt) {
  return guarded([&] {
    const SchemeParams p = resolve_params(opt.sizes);
    const ParamReport report = validate(p);
    if (!report.ok()) return report_failures(report);
    const auto dp = prime_count_estimate(p.p_bits);
    const auto du = prime_count_estimate(p.u_bits);
    const double co = bruteforce_keyspace(p, KeyspaceMode::CiphertextOnly);
    const double kp = bruteforce_keyspace(p, KeyspaceMode::KnownPlaintext);
    const auto bits = ciphertext_bits(p);
    if (opt.format == Format::Json) {
      std::cout << json{{"params", params_json(p)},
                        {"log2_d_lp", dp.log2_estimate},
                        {"log2_d_lu", du.log2_estimate},
                        {"ciphertext_only_log2", co},
                        {"known_plaintext_log2", kp},
                        {"ciphertext_bits", bits}}
                       .dump(2)
                << '\n';
      return kExitOk;
    }
    std::cout << "params            " << params_line(p) << '\n'
              << "d_lp              ~2^" << fmt2(dp.log2_estimate) << '\n'
              << "d_lu              ~2^" << fmt2(du.log2_estimate) << '\n'
              << "ciphertext-only   ~2^" << fmt2(co) << '\n'
              << "known-plaintext   ~2^" << fmt2(kp) << '\n'
              << "ciphertext size   " << bits << " bits\n";
    return kExitOk;
  });
}

int cmd_params(const ParamsOptions& opt) {
  return guarded([&] {
    SchemeParams p;
    if (opt.action == "suggest") {
      const auto& s = opt.sizes;
      if (!s.lambda || !s.lm || !s.N || !s.A)
        throw Error(ErrorKind::ParseError, "--lambda, --lm, --N and --A are required");
      p = suggest(*s.lambda, *s.lm, *s.N, *s.A);
    } else if (opt.action == "validate") {
      p = resolve_params(opt.sizes);
    } else {
      throw Error(ErrorKind::ParseError, "unknown params action: " + opt.action);
    }
    const ParamReport report = validate(p);
    print_report(report, opt.format);
    return report.ok() ? kExitOk : report_failures(report);
  });
}

int cmd_bench(const BenchOptions& opt) {
  return guarded([&] {
    const SchemeParams p = resolve_params(opt.sizes);
    const ParamReport report = validate(p);
    if (!report.ok()) return report_failures(report);
    if (opt.iters < 1) throw Error(ErrorKind::OutOfRange, "--iters must be at least 1");
    auto rng = make_rng(opt.seed);
    const SecretKey key = keygen(p, *rng);
    const KeyShape shape = KeyShape::of(key);
    const auto fresh = [&] {
      const BigInt m = random_message(p, *rng);
      return std::pair{m, encrypt(key, Plaintext{m}, *rng)};
    };
    std::vector<std::string> ops = opt.ops;
    if (ops.empty()) ops = {"encrypt", "decrypt", "add", "mul", "lll"};
    int status = kExitOk;
    for (const auto& op : ops) {
      std::vector<double> times;
      std::size_t mismatches = 0, checked = 0;
      if (op == "mul" && p.max_mults < 1) {
        std::cerr << "mfhmrs: bench mul skipped, N = 0\n";
        continue;
      }
      for (int it = 0; it < opt.iters; ++it) {
        using clock = std::chrono::steady_clock;
        clock::time_point t0, t1;
        if (op == "encrypt") {
          const BigInt m = random_message(p, *rng);
          t0 = clock::now();
          const Ciphertext c = encrypt(key, Plaintext{m}, *rng);
          t1 = clock::now();
          if (it % 10 == 0) {
            ++checked;
            mismatches += decrypt(key, c).value != m;
          }
        } else if (op == "decrypt") {
          const auto [m, c] = fresh();
          t0 = clock::now();
          const Plaintext out = decrypt(key, c);
          t1 = clock::now();
          ++checked;
          mismatches += out.value != m;
        } else if (op == "add" || op == "mul") {
          const auto [m1, c1] = fresh();
          const auto [m2, c2] = fresh();
          t0 = clock::now();
          const Ciphertext c = op == "add" ? hom_add(shape, c1, c2) : hom_mul(shape, c1, c2);
          t1 = clock::now();
          if (it % 10 == 0) {
            ++checked;
            const BigInt want = floor_mod(op == "add" ? BigInt(m1 + m2) : BigInt(m1 * m2), key.u());
            mismatches += decrypt(key, c).value != want;
          }
        } else if (op == "lll") {
          std::vector<BigInt> samples;
          for (int j = 0; j <= opt.t; ++j) samples.push_back(fresh().second.shares.front());
          const int scale = std::max(0, p.g_bits + p.u_bits - p.p_bits) + p.p_bits;
          const LatticeBasis b = build_basis(samples, scale);
          t0 = clock::now();
          (void)lll_reduce(b);
          t1 = clock::now();
        } else {
          throw Error(ErrorKind::ParseError, "unknown bench op: " + op);
        }
        times.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
      }
      std::printf("bench op=%s iters=%d median_us=%.3f p95_us=%.3f checked=%zu mismatches=%zu\n",
                  op.c_str(), opt.iters, percentile(times, 0.5), percentile(times, 0.95),
                  checked, mismatches);
      if (mismatches) status = kExitFailure;
    }
    return status;
  });
}

}  // namespace mfhmrs::cli
