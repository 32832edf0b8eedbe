// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace mfhmrs {

// Caller-owned source of random bytes. Implementations throw
// Error(RandomnessFailure) when they cannot deliver.
class EntropySource {
 public:
  virtual ~EntropySource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// Operating-system CSPRNG (getrandom(2)).
class OsEntropy final : public EntropySource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Reproducible byte stream for fixtures and tests. Not a CSPRNG; never use it
// for keys that protect real data.
class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(std::uint64_t seed);
  explicit SeededEntropy(std::span<const std::uint8_t> seed_bytes);

  void fill(std::span<std::uint8_t> out) override;

 private:
  std::mt19937_64 engine_;
};

}  // namespace mfhmrs
