// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mfhmrs/scheme.hpp"

namespace mfhmrs {

// Key file, one field per line, '\n' terminated:
//
//   MFHMRS-KEY v1            (FHMRS-KEY v1 for legacy keys)
//   lambda=<dec>
//   lm=<dec>
//   N=<dec>
//   A=<dec>
//   S=<dec>                  (signed; legacy keys store 2 - N)
//   lg=<dec>
//   u=<hex>
//   n=<hex>
//   p[1]=<hex> ... p[N+S]=<hex>
//
// Hex is lowercase big-endian without leading zeros. l_u and l_p are the bit
// lengths of u and p[1]. Parsing is strict: only the canonical spelling is
// accepted, so parse followed by serialize reproduces the input bytes.
std::string serialize_key(const SecretKey& key);
SecretKey parse_key(std::string_view text);

// Ciphertext file:
//
//   MFHMRS-CT v1
//   shares=<dec>
//   mults=<dec>
//   adds=<dec>
//   constbits=<dec>
//   c[1]=<+|-><hex> ... c[k]=<+|-><hex>     (zero is "+0")
std::string serialize_ciphertext(const Ciphertext& c);
Ciphertext parse_ciphertext(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace mfhmrs
