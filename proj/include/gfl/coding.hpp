#pragma once

// Block codec over Z_m built on the matrix
//
//   M_n = | g_{n+1}  g_n     |
//         | g_n      g_{n-1} |
//
// A 2x2 block B of residues is sent as B M_n mod m together with the check
// residue det(B) mod m. Decoding multiplies by M_n^{-1} mod m and flags the
// block when the determinant no longer matches. Errors are detected, never
// corrected.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfl/exact_arith.hpp"
#include "gfl/report.hpp"
#include "gfl/sequences.hpp"

namespace gfl {

struct config_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed frame; offset is the byte position where parsing stopped.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Row-major 2x2 integer matrix.
struct CodingMatrix {
  std::array<Integer, 4> m;

  Integer det() const { return Integer(m[0] * m[3] - m[1] * m[2]); }
  friend bool operator==(const CodingMatrix&, const CodingMatrix&) = default;
};

/// n >= 2.
CodingMatrix build_Mn(const GFLParams& params, std::int64_t n);

/// det M_n = (-1)^{n-1} (p^2 + 5q^2 + 5pq) for n >= 2, and additionally
/// M_n = M_{n-1} + M_{n-2} when n >= 4.
IdentityReport check_prop34(const GFLParams& params, std::int64_t n);

struct CodecConfig {
  std::int64_t p = 1, q = 0, n = 2;
  std::uint64_t m = 65521;
};

/// Throws config_error unless n >= 2, 2 <= m <= 2^32 and gcd(det M_n, m) = 1.
void validate(const CodecConfig& cfg);

using Block = std::array<std::uint64_t, 4>;

struct EncodedBlock {
  Block cipher;
  std::uint64_t check;
};

struct DecodedBlock {
  Block block;
  bool corrupt;
};

/// Immutable codec state: M_n and M_n^{-1} reduced mod m.
class Codec {
 public:
  explicit Codec(const CodecConfig& cfg);

  const CodecConfig& config() const { return cfg_; }
  const Block& matrix() const { return mat_; }
  const Block& inverse() const { return inv_; }

  /// Entries must lie in [0, m).
  EncodedBlock encode(const Block& block) const;
  DecodedBlock decode(const Block& cipher, std::uint64_t check) const;

  std::uint64_t det(const Block& b) const;
  Block mul(const Block& x, const Block& y) const;

 private:
  CodecConfig cfg_;
  Block mat_, inv_;
};

EncodedBlock encode_block(const Block& block, const CodecConfig& cfg);
DecodedBlock decode_block(const Block& cipher, std::uint64_t check, const CodecConfig& cfg);

/// Largest k with 256^k <= m: the number of payload bytes per digit.
unsigned bytes_per_digit(std::uint64_t m);

/// Frame layout (little-endian):
///   "GFLC", u8 version = 1, i64 p, i64 q, i64 n, i64 m, u64 payload length,
///   then per block 4 cipher residues and 1 check residue as u32.
/// Needs m >= 257.
std::vector<std::uint8_t> encode_stream(const std::vector<std::uint8_t>& payload, const CodecConfig& cfg);

struct StreamDecode {
  CodecConfig config;
  std::vector<std::uint8_t> payload;
  /// Zero-based indices of blocks whose check failed.
  std::vector<std::size_t> corrupt_blocks;

  bool clean() const { return corrupt_blocks.empty(); }
};

/// Throws parse_error on malformed framing and config_error when `expected`
/// is given and differs from the header.
StreamDecode decode_stream(const std::vector<std::uint8_t>& frame,
                           const std::optional<CodecConfig>& expected = std::nullopt);

struct DetectionStats {
  std::uint64_t trials = 0;
  std::uint64_t flagged = 0;
  /// Corruptions that changed det(decoded) mod m yet were not flagged.
  std::uint64_t missed_determinant_changes = 0;

  double rate() const { return trials ? static_cast<double>(flagged) / static_cast<double>(trials) : 0.0; }
};

/// Corrupts one random residue (cipher or check) of a random block per trial.
DetectionStats measure_detection(const CodecConfig& cfg, std::uint64_t trials, std::uint64_t seed);

}  // namespace gfl
