// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include "doctest.h"
#include "mfhmrs/circuit.hpp"
#include "mfhmrs/entropy.hpp"
#include "mfhmrs/fileformat.hpp"
#include "support/oracles.hpp"

using namespace mfhmrs;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out, err;
};

class Sandbox {
 public:
  Sandbox() {
    dir_ = fs::temp_directory_path() /
           ("mfhmrs_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Run run(const std::string& args) const {
    const std::string out = path("stdout.txt"), err = path("stderr.txt");
    const std::string cmd = std::string("\"") + MFHMRS_CLI_PATH + "\" " + args + " >\"" + out +
                            "\" 2>\"" + err + "\"";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_text_file(out);
    r.err = read_text_file(err);
    return r;
  }

 private:
  fs::path dir_;
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("params and keygen") {
  Sandbox box;
  Run r = box.run("params validate --set 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "l_p range  [122, 173]"));
  CHECK(contains(r.out, "result     valid"));

  r = box.run("params validate --set 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "l_p range  [3405/19 (~179.21), 225]"));

  r = box.run("keygen --lambda 32 --lm 8 --N 1 --A 4 --out " + box.path("k.key"));
  CHECK(r.code == 0);
  CHECK(fs::exists(box.path("k.key")));

  r = box.run("keygen --set 1 --lg 20 --out " + box.path("bad.key"));
  CHECK(r.code == 2);
  CHECK(contains(r.err, "l_g ≥ λ/4"));
  CHECK_FALSE(fs::exists(box.path("bad.key")));

  r = box.run("params suggest --lambda 128 --lm 10 --N 1 --A 20 --format json");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"ok\": true"));

  CHECK(box.run("keygen --lambda 32").code == 4);
  CHECK(box.run("frobnicate").code == 4);
}

TEST_CASE("encrypt, eval, decrypt pipeline") {
  Sandbox box;
  const std::string key = box.path("k.key");
  REQUIRE(box.run("keygen --lambda 32 --lm 8 --N 1 --A 4 --out " + key).code == 0);
  REQUIRE(box.run("encrypt --key " + key + " --out " + box.path("a.ct") + " 3").code == 0);
  REQUIRE(box.run("encrypt --key " + key + " --out " + box.path("b.ct") + " 2").code == 0);

  Run r = box.run("eval --key " + key + " --circuit \"c1*c2\" --in " + box.path("a.ct") +
                  " --in " + box.path("b.ct") + " --out " + box.path("p.ct"));
  REQUIRE(r.code == 0);
  r = box.run("decrypt --key " + key + " --in " + box.path("p.ct"));
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");

  r = box.run("eval --key " + key + " --circuit \"c2-c1\" --in " + box.path("a.ct") + " --in " +
              box.path("b.ct") + " --out " + box.path("d.ct"));
  REQUIRE(r.code == 0);
  r = box.run("decrypt --centered --key " + key + " --in " + box.path("d.ct"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\n-1\n"));

  r = box.run("eval --key " + key + " --circuit \"c1**c2\" --in " + box.path("a.ct") + " --in " +
              box.path("b.ct") + " --out " + box.path("x.ct"));
  CHECK(r.code == 4);
  CHECK(contains(r.err, "column 4"));

  r = box.run("eval --key " + key + " --circuit \"c1*c2*c1\" --in " + box.path("a.ct") +
              " --in " + box.path("b.ct") + " --out " + box.path("x.ct"));
  CHECK(r.code == 3);

  CHECK(box.run("encrypt --key " + key + " --out " + box.path("x.ct") + " 256").code == 4);
  CHECK(box.run("encrypt --key " + key + " --out " + box.path("x.ct") + " 12x").code == 4);

  // N = 0 rejects any ciphertext product.
  const std::string key0 = box.path("k0.key");
  REQUIRE(box.run("keygen --lambda 32 --lm 8 --N 0 --A 4 --out " + key0).code == 0);
  REQUIRE(box.run("encrypt --key " + key0 + " --out " + box.path("z.ct") + " 3").code == 0);
  CHECK(box.run("eval --key " + key0 + " --circuit \"c1*c1\" --in " + box.path("z.ct") +
                " --out " + box.path("x.ct"))
            .code == 3);
  // Ciphertexts under a key with a different share count.
  CHECK(box.run("decrypt --key " + key0 + " --in " + box.path("a.ct")).code == 5);
  CHECK(box.run("decrypt --key " + key + " --in " + box.path("missing.ct")).code == 1);
  write_text_file(box.path("junk.ct"), "MFHMRS-CT v1\nshares=01\n");
  CHECK(box.run("decrypt --key " + key + " --in " + box.path("junk.ct")).code == 4);
}

TEST_CASE("attack demonstrations") {
  Sandbox box;
  const std::string legacy = box.path("legacy.key");
  REQUIRE(box.run("keygen --legacy --lm 8 --N 1 --A 4 --lu 32 --out " + legacy).code == 0);
  CHECK(read_text_file(legacy).rfind("FHMRS-KEY v1\n", 0) == 0);
  Run r = box.run("attack kpa-gcd --key " + legacy + " --pairs 8 --trials 20");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "report attack=kpa-gcd success=1"));

  const std::string set1 = box.path("set1.key");
  REQUIRE(box.run("keygen --set 1 --out " + set1).code == 0);
  r = box.run("attack lattice-u --key " + set1 + " --t 10");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "log2 |v|"));
  CHECK(contains(r.out, "log2 LLL bound"));
  CHECK(contains(r.out, "feasible           no"));
  CHECK(contains(r.out, "success=0"));

  r = box.run("attack kpa-gcd --key " + set1 + " --pairs 8 --trials 5");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "success=0"));

  r = box.run("attack linear --lg 4 --seed 0a0b");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "report attack=linear-u-p success=1"));
  CHECK(box.run("attack linear --lg 9").code == 4);

  write_text_file(box.path("s.txt"), "# known pairs\n4 610\n9 3544\n");
  r = box.run("attack kpa-gcd --samples " + box.path("s.txt"));
  CHECK(r.code == 0);
  CHECK(contains(r.out, "u=0x65"));
}

TEST_CASE("estimate and bench") {
  Sandbox box;
  Run r = box.run("estimate --set 1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "ciphertext-only   ~2^484.05"));
  CHECK(contains(r.out, "known-plaintext   ~2^483.05"));
  CHECK(contains(r.out, "ciphertext size   384 bits"));
  r = box.run("estimate --set 2");
  CHECK(contains(r.out, "ciphertext size   3420 bits"));

  r = box.run("bench --lambda 32 --lm 8 --N 1 --A 4 --iters 20 --ops encrypt --ops mul --ops lll "
              "--t 4");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "bench op=encrypt"));
  CHECK(contains(r.out, "bench op=mul"));
  CHECK(contains(r.out, "bench op=lll"));
  CHECK_FALSE(contains(r.out, "mismatches=1"));
  CHECK(contains(r.out, "mismatches=0"));
}

TEST_CASE("files and in-memory evaluation agree") {
  Sandbox box;
  const std::string key_path = box.path("k.key");
  REQUIRE(box.run("keygen --lambda 32 --lm 6 --N 2 --A 6 --out " + key_path).code == 0);
  const SecretKey key = parse_key(read_text_file(key_path));
  const KeyShape shape = KeyShape::of(key);
  SeededEntropy rng(5);
  std::mt19937_64 gen(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<BigInt> m;
    std::vector<Ciphertext> c;
    std::string ins;
    for (int i = 0; i < 3; ++i) {
      m.push_back(random_bits(rng, 6));
      c.push_back(encrypt(key, {m.back()}, rng));
      const std::string p = box.path("in" + std::to_string(i) + ".ct");
      write_text_file(p, serialize_ciphertext(c.back()));
      ins += " --in " + p;
    }
    const auto rc = oracle::random_circuit(shape, m, gen);
    CAPTURE(rc.text);
    const Run r = box.run("eval --key " + key_path + " --circuit \"" + rc.text + "\"" + ins +
                          " --out " + box.path("out.ct"));
    REQUIRE(r.code == 0);
    const Ciphertext mem = Circuit::parse(rc.text).evaluate(shape, c);
    CHECK(read_text_file(box.path("out.ct")) == serialize_ciphertext(mem));
    const Run d = box.run("decrypt --key " + key_path + " --in " + box.path("out.ct"));
    CHECK(d.out == floor_mod(rc.plain, key.u()).get_str() + "\n");
  }
}
