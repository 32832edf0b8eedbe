// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/entropy.hpp"

#include <sys/random.h>

#include <cerrno>
#include <cstring>
#include <string>
#include <vector>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

void OsEntropy::fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t got = ::getrandom(out.data() + done, out.size() - done, 0);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorKind::RandomnessFailure,
                  std::string("getrandom failed: ") + std::strerror(errno));
    }
    done += static_cast<std::size_t>(got);
  }
}

SeededEntropy::SeededEntropy(std::uint64_t seed) : engine_(seed) {}

SeededEntropy::SeededEntropy(std::span<const std::uint8_t> seed_bytes) {
  std::vector<std::uint32_t> words;
  for (std::size_t i = 0; i < seed_bytes.size(); i += 4) {
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < 4 && i + j < seed_bytes.size(); ++j)
      w |= static_cast<std::uint32_t>(seed_bytes[i + j]) << (8 * j);
    words.push_back(w);
  }
  std::seed_seq seq(words.begin(), words.end());
  engine_.seed(seq);
}

void SeededEntropy::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int b = 0; b < 8 && i < out.size(); ++b, ++i) {
      out[i] = static_cast<std::uint8_t>(word & 0xff);
      word >>= 8;
    }
  }
}

}  // namespace mfhmrs
