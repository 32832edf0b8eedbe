// Copyright 2026 The mfhmrs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "mfhmrs/fileformat.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "mfhmrs/error.hpp"

namespace mfhmrs {

namespace {

constexpr std::string_view kKeyHeader = "MFHMRS-KEY v1";
constexpr std::string_view kLegacyKeyHeader = "FHMRS-KEY v1";
constexpr std::string_view kCiphertextHeader = "MFHMRS-CT v1";

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

// Splits on '\n'; the text must end with exactly one trailing newline.
std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.empty() || text.back() != '\n')
    throw Error(ErrorKind::ParseError, "file must end with a newline");
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) : lines_(split_lines(text)) {}

  std::string_view next_raw() {
    if (pos_ >= lines_.size()) malformed(pos_ + 1, "unexpected end of file");
    return lines_[pos_++];
  }

  std::string_view value_of(std::string_view key) {
    const std::string_view line = next_raw();
    if (line.size() <= key.size() || line.substr(0, key.size()) != key ||
        line[key.size()] != '=')
      malformed(pos_, "expected '" + std::string(key) + "='");
    return line.substr(key.size() + 1);
  }

  long long decimal(std::string_view key) {
    const std::string_view v = value_of(key);
    const bool negative = !v.empty() && v.front() == '-';
    const std::string_view digits = negative ? v.substr(1) : v;
    const bool canonical = !digits.empty() &&
                           (digits == "0" ? !negative : digits.front() != '0');
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (!canonical || ec != std::errc() || ptr != v.data() + v.size())
      malformed(pos_, "non-canonical decimal for '" + std::string(key) + "'");
    return out;
  }

  BigInt hex(std::string_view key) {
    const std::string_view v = value_of(key);
    try {
      return from_hex(v);
    } catch (const Error& e) {
      malformed(pos_, e.what());
    }
  }

  BigInt signed_hex(std::string_view key) {
    const std::string_view v = value_of(key);
    if (v.size() < 2 || (v.front() != '+' && v.front() != '-'))
      malformed(pos_, "expected sign-prefixed hex");
    BigInt mag;
    try {
      mag = from_hex(v.substr(1));
    } catch (const Error& e) {
      malformed(pos_, e.what());
    }
    if (v.front() == '-' && mag == 0) malformed(pos_, "zero must be written +0");
    return v.front() == '-' ? BigInt(-mag) : mag;
  }

  void expect_end() {
    if (pos_ != lines_.size()) malformed(pos_ + 1, "trailing content");
  }

  std::size_t line() const { return pos_; }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

int small_int(long long v, std::size_t line) {
  if (v < -(1LL << 30) || v > (1LL << 30)) malformed(line, "value out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string serialize_key(const SecretKey& key) {
  const SchemeParams& p = key.params();
  std::ostringstream out;
  out << (key.legacy() ? kLegacyKeyHeader : kKeyHeader) << '\n'
      << "lambda=" << p.security_bits << '\n'
      << "lm=" << p.msg_bits << '\n'
      << "N=" << p.max_mults << '\n'
      << "A=" << p.max_adds << '\n'
      << "S=" << p.extra_shares << '\n'
      << "lg=" << p.g_bits << '\n'
      << "u=" << to_hex(key.u()) << '\n'
      << "n=" << to_hex(key.n()) << '\n';
  for (std::size_t i = 0; i < key.share_count(); ++i)
    out << "p[" << (i + 1) << "]=" << to_hex(key.share_primes()[i]) << '\n';
  return out.str();
}

SecretKey parse_key(std::string_view text) {
  LineReader in(text);
  const std::string_view header = in.next_raw();
  bool legacy = false;
  if (header == kLegacyKeyHeader) {
    legacy = true;
  } else if (header != kKeyHeader) {
    malformed(1, "unknown key header");
  }
  SchemeParams p;
  p.security_bits = small_int(in.decimal("lambda"), in.line());
  p.msg_bits = small_int(in.decimal("lm"), in.line());
  p.max_mults = small_int(in.decimal("N"), in.line());
  p.max_adds = small_int(in.decimal("A"), in.line());
  p.extra_shares = small_int(in.decimal("S"), in.line());
  p.g_bits = small_int(in.decimal("lg"), in.line());
  BigInt u = in.hex("u");
  const BigInt n = in.hex("n");
  const int shares = p.share_count();
  if (shares < 1 || shares > 4096) malformed(in.line(), "N+S out of range");
  std::vector<BigInt> primes;
  for (int i = 1; i <= shares; ++i)
    primes.push_back(in.hex("p[" + std::to_string(i) + "]"));
  in.expect_end();

  BigInt product = 1;
  for (const BigInt& q : primes) product *= q;
  if (product != n) throw Error(ErrorKind::ParseError, "n is not the product of the p[i]");
  p.u_bits = static_cast<int>(bit_length(u));
  p.p_bits = static_cast<int>(bit_length(primes.front()));
  if (legacy) {
    if (shares != 2) throw Error(ErrorKind::ParseError, "legacy keys have two shares");
    if (u >= primes[0] || u >= primes[1])
      throw Error(ErrorKind::ParseError, "legacy keys need u < p and u < q");
  }
  try {
    return SecretKey::assemble(p, std::move(primes), std::move(u), legacy);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string serialize_ciphertext(const Ciphertext& c) {
  std::ostringstream out;
  out << kCiphertextHeader << '\n'
      << "shares=" << c.shares.size() << '\n'
      << "mults=" << c.mults_used << '\n'
      << "adds=" << c.adds_used << '\n'
      << "constbits=" << c.const_ops_bits << '\n';
  for (std::size_t i = 0; i < c.shares.size(); ++i)
    out << "c[" << (i + 1) << "]=" << (c.shares[i] < 0 ? '-' : '+') << to_hex(c.shares[i])
        << '\n';
  return out.str();
}

Ciphertext parse_ciphertext(std::string_view text) {
  LineReader in(text);
  if (in.next_raw() != kCiphertextHeader) malformed(1, "unknown ciphertext header");
  const long long count = in.decimal("shares");
  if (count < 1 || count > 4096) malformed(in.line(), "share count out of range");
  Ciphertext c;
  c.mults_used = small_int(in.decimal("mults"), in.line());
  c.adds_used = small_int(in.decimal("adds"), in.line());
  c.const_ops_bits = small_int(in.decimal("constbits"), in.line());
  if (c.mults_used < 0 || c.adds_used < 0 || c.const_ops_bits < 0)
    malformed(in.line(), "ledger counters must be non-negative");
  for (long long i = 1; i <= count; ++i)
    c.shares.push_back(in.signed_hex("c[" + std::to_string(i) + "]"));
  in.expect_end();
  return c;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace mfhmrs
