// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <string>

#include "doctest.h"
#include "mfhmrs/entropy.hpp"
#include "mfhmrs/fileformat.hpp"
#include "mfhmrs/legacy.hpp"
#include "mfhmrs/params.hpp"
#include "support/error_check.hpp"
#include "support/oracles.hpp"

using namespace mfhmrs;

namespace {

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("toy key file is byte-exact") {
  const std::string text = serialize_key(oracle::toy_key());
  CHECK(text ==
        "MFHMRS-KEY v1\n"
        "lambda=4\n"
        "lm=3\n"
        "N=1\n"
        "A=1\n"
        "S=2\n"
        "lg=2\n"
        "u=7\n"
        "n=97f\n"
        "p[1]=b\n"
        "p[2]=d\n"
        "p[3]=11\n");
  const SecretKey back = parse_key(text);
  CHECK(back.u() == 7);
  CHECK(back.params() == oracle::toy_key().params());
  CHECK(serialize_key(back) == text);
}

TEST_CASE("key parsing is strict") {
  const std::string good = serialize_key(oracle::toy_key());
  CHECK_THROWS_KIND(parse_key(replace(good, "n=97f", "n=97e")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(replace(good, "u=7", "u=07")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(replace(good, "p[1]=b", "p[1]=B")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(replace(good, "N=1", "N=01")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(replace(good, "lm=3", "lm =3")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(replace(good, "MFHMRS-KEY v1", "MFHMRS-KEY v2")),
                    ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(good.substr(0, good.size() - 1)), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(good + "extra\n"), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_key(replace(good, "p[3]=11\n", "")), ErrorKind::ParseError);
  // 15 is not prime: structural checks surface as parse errors.
  CHECK_THROWS_KIND(parse_key(replace(replace(good, "p[3]=11", "p[3]=f"), "n=97f", "n=861")),
                    ErrorKind::ParseError);
}

TEST_CASE("legacy key file") {
  LegacyParams p;
  p.msg_bits = 4;
  p.max_mults = 0;
  p.max_adds = 1;
  p.u_bits = 7;
  const SecretKey key = legacy_assemble(p, 10007, 10009, 101);
  const std::string text = serialize_key(key);
  CHECK(text.rfind("FHMRS-KEY v1\n", 0) == 0);
  const SecretKey back = parse_key(text);
  CHECK(back.legacy());
  CHECK(serialize_key(back) == text);
}

TEST_CASE("ciphertext file") {
  Ciphertext c;
  c.shares = {0, 255, -16};
  c.mults_used = 1;
  c.adds_used = 2;
  c.const_ops_bits = 3;
  const std::string text = serialize_ciphertext(c);
  CHECK(text ==
        "MFHMRS-CT v1\n"
        "shares=3\n"
        "mults=1\n"
        "adds=2\n"
        "constbits=3\n"
        "c[1]=+0\n"
        "c[2]=+ff\n"
        "c[3]=-10\n");
  CHECK(parse_ciphertext(text) == c);
  CHECK_THROWS_KIND(parse_ciphertext(replace(text, "c[1]=+0", "c[1]=-0")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_ciphertext(replace(text, "c[2]=+ff", "c[2]=ff")), ErrorKind::ParseError);
  CHECK_THROWS_KIND(parse_ciphertext(replace(text, "shares=3", "shares=4")), ErrorKind::ParseError);
}

TEST_CASE("randomized round trips") {
  SeededEntropy rng(23);
  std::mt19937_64 gen(23);
  for (int t = 0; t < 60; ++t) {
    const SchemeParams p = suggest(8 + static_cast<int>(gen() % 40), 1 + static_cast<int>(gen() % 8),
                                   static_cast<int>(gen() % 4), static_cast<int>(gen() % 10));
    const SecretKey key = keygen(p, rng);
    const std::string text = serialize_key(key);
    REQUIRE(serialize_key(parse_key(text)) == text);

    Ciphertext c = encrypt(key, {random_bits(rng, static_cast<std::size_t>(p.msg_bits))}, rng);
    if (gen() & 1) c = hom_negate(c);
    c.mults_used = static_cast<int>(gen() % 5);
    const std::string ct = serialize_ciphertext(c);
    REQUIRE(parse_ciphertext(ct) == c);
    REQUIRE(serialize_ciphertext(parse_ciphertext(ct)) == ct);
  }
}
