// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0
//
// mfhmrs: key generation, encryption, homomorphic evaluation, parameter
// advice, attack demonstrations and micro-benchmarks.
//
// Exit codes: 0 ok, 1 failure, 2 invalid parameters, 3 budget exceeded,
// 4 malformed input, 5 share-count mismatch.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace mfhmrs::cli;

void add_sizes(CLI::App* cmd, SizeFlags& s) {
  cmd->add_option("--set", s.preset, "Reference parameter set (1 or 2)");
  cmd->add_option("--lambda", s.lambda, "Security level in bits");
  cmd->add_option("--lm", s.lm, "Plaintext bit length");
  cmd->add_option("--N", s.N, "Multiplication budget");
  cmd->add_option("--A", s.A, "Addition budget");
  cmd->add_option("--S", s.S, "Extra shares beyond N");
  cmd->add_option("--lu", s.lu, "Bit length of u");
  cmd->add_option("--lg", s.lg, "Bit length of the encryption randomness");
  cmd->add_option("--lp", s.lp, "Bit length of each share prime");
}

void add_format(CLI::App* cmd, Format& f) {
  cmd->add_option("--format", f, "Report format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::Table}, {"json", Format::Json}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mfhmrs: somewhat homomorphic encryption over CRT shares"};
  app.require_subcommand(1);

  KeygenOptions keygen;
  auto* kg = app.add_subcommand("keygen", "Generate a secret key");
  add_sizes(kg, keygen.sizes);
  kg->add_flag("--legacy", keygen.legacy, "Two-share legacy key (p, q, u)");
  kg->add_option("--ln", keygen.ln, "Legacy: bit length of n = p*q");
  kg->add_option("--out", keygen.out, "Key file")->required();
  kg->add_option("--seed", keygen.seed, "Hex seed for a deterministic generator (fixtures only)");
  add_format(kg, keygen.format);

  EncryptOptions enc;
  auto* ec = app.add_subcommand("encrypt", "Encrypt a decimal plaintext");
  ec->add_option("--key", enc.key, "Key file")->required();
  ec->add_option("--out", enc.out, "Ciphertext file")->required();
  ec->add_option("message", enc.message, "Plaintext in [0, 2^lm)")->required();
  ec->add_option("--seed", enc.seed, "Hex seed for a deterministic generator (fixtures only)");

  DecryptOptions dec;
  auto* dc = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
  dc->add_option("--key", dec.key, "Key file")->required();
  dc->add_option("--in", dec.in, "Ciphertext file")->required();
  dc->add_flag("--centered", dec.centered, "Also print the signed decoding");

  EvalOptions ev;
  auto* evc = app.add_subcommand("eval", "Evaluate a circuit over ciphertext files");
  evc->add_option("--key", ev.key, "Key file")->required();
  evc->add_option("--circuit", ev.circuit, "Expression over c1..ck, e.g. (c1+c2)*c3")->required();
  evc->add_option("--in", ev.inputs, "Ciphertext file for c1, c2, ... (repeatable)");
  evc->add_option("--out", ev.out, "Result ciphertext file")->required();

  AttackOptions atk;
  auto* ac = app.add_subcommand("attack", "Run an attack demonstration");
  ac->add_option("mode", atk.mode, "kpa-gcd | lattice-u | lattice-p | linear | close-g")
      ->required()
      ->check(CLI::IsMember({"kpa-gcd", "lattice-u", "lattice-p", "linear", "close-g"}));
  ac->add_option("--key", atk.key, "Key file to attack");
  ac->add_option("--samples", atk.samples, "Sample file: lines 'c' or 'm c'");
  ac->add_option("--pairs", atk.pairs, "Known pairs per kpa-gcd trial");
  ac->add_option("--t", atk.t, "Lattice dimension minus one");
  ac->add_option("--trials", atk.trials, "Independent trials");
  ac->add_option("--jobs", atk.jobs, "Worker threads");
  ac->add_option("--lg", atk.g_bits, "Randomness bits of the linear toy fixture");
  ac->add_flag("--known-plaintext", atk.known_plaintext, "Subtract known plaintexts first");
  ac->add_option("--scale", atk.scale, "Exponent of the basis scale entry");
  ac->add_option("--seed", atk.seed, "Hex seed for a deterministic generator (fixtures only)");
  add_format(ac, atk.format);

  EstimateOptions est;
  auto* es = app.add_subcommand("estimate", "Brute-force keyspace and ciphertext size");
  add_sizes(es, est.sizes);
  add_format(es, est.format);

  ParamsOptions par;
  auto* pc = app.add_subcommand("params", "Validate or suggest parameters");
  pc->add_option("action", par.action, "validate | suggest")
      ->required()
      ->check(CLI::IsMember({"validate", "suggest"}));
  add_sizes(pc, par.sizes);
  add_format(pc, par.format);

  BenchOptions bench;
  auto* bc = app.add_subcommand("bench", "Time scheme operations");
  add_sizes(bc, bench.sizes);
  bc->add_option("--ops", bench.ops, "encrypt | decrypt | add | mul | lll (repeatable)")
      ->check(CLI::IsMember({"encrypt", "decrypt", "add", "mul", "lll"}));
  bc->add_option("--iters", bench.iters, "Iterations per operation");
  bc->add_option("--t", bench.t, "Lattice dimension minus one for lll");
  bc->add_option("--seed", bench.seed, "Hex seed for a deterministic generator (fixtures only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "mfhmrs: " << e.what() << '\n';
    return kExitMalformed;
  }

  if (*kg) return cmd_keygen(keygen);
  if (*ec) return cmd_encrypt(enc);
  if (*dc) return cmd_decrypt(dec);
  if (*evc) return cmd_eval(ev);
  if (*ac) return cmd_attack(atk);
  if (*es) return cmd_estimate(est);
  if (*pc) return cmd_params(par);
  if (*bc) return cmd_bench(bench);
  return kExitFailure;
}
