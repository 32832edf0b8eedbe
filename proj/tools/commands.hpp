// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mfhmrs::cli {

// Exit codes are part of the interface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMalformed = 4;
inline constexpr int kExitShareMismatch = 5;

enum class Format { Table, Json };

struct SizeFlags {
  std::optional<int> preset;  // --set 1|2, the two reference sets
  std::optional<int> lambda, lm, N, A, S, lu, lg, lp;
};

struct KeygenOptions {
  SizeFlags sizes;
  bool legacy = false;
  std::optional<int> ln;
  std::string out;
  std::optional<std::string> seed;
  Format format = Format::Table;
};

struct EncryptOptions {
  std::string key, out, message;
  std::optional<std::string> seed;
};

struct DecryptOptions {
  std::string key, in;
  bool centered = false;
};

struct EvalOptions {
  std::string key, circuit, out;
  std::vector<std::string> inputs;
};

struct AttackOptions {
  std::string mode;
  std::optional<std::string> key;
  std::optional<std::string> samples;
  int pairs = 2;
  int t = 10;
  int trials = 1;
  unsigned jobs = 1;
  int g_bits = 4;
  bool known_plaintext = false;
  std::optional<int> scale;
  std::optional<std::string> seed;
  Format format = Format::Table;
};

struct EstimateOptions {
  SizeFlags sizes;
  Format format = Format::Table;
};

struct ParamsOptions {
  std::string action;  // validate | suggest
  SizeFlags sizes;
  Format format = Format::Table;
};

struct BenchOptions {
  SizeFlags sizes;
  std::vector<std::string> ops;
  int iters = 100;
  int t = 10;
  std::optional<std::string> seed;
};

int cmd_keygen(const KeygenOptions& opt);
int cmd_encrypt(const EncryptOptions& opt);
int cmd_decrypt(const DecryptOptions& opt);
int cmd_eval(const EvalOptions& opt);
int cmd_attack(const AttackOptions& opt);
int cmd_estimate(const EstimateOptions& opt);
int cmd_params(const ParamsOptions& opt);
int cmd_bench(const BenchOptions& opt);

}  // namespace mfhmrs::cli
