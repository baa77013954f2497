#include "gfl/coding.hpp"

#include <random>

namespace gfl {
namespace {

constexpr char kMagic[4] = {'G', 'F', 'L', 'C'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 1 + 4 * 8 + 8;
constexpr std::size_t kBlockSize = 5 * 4;
constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

std::uint64_t reduce(const Integer& z, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), m);
  return r.get_ui();
}

void put_le(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
  for (unsigned i = 0; i < bytes; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& data) : data_(data) {}

  std::uint64_t le(unsigned bytes, const char* what) {
    if (data_.size() - pos_ < bytes) throw parse_error(std::string("truncated ") + what, pos_);
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i) v |= std::uint64_t{data_[pos_ + i]} << (8 * i);
    pos_ += bytes;
    return v;
  }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  const std::vector<std::uint8_t>& data_;
  std::size_t pos_ = 0;
};

// g_0 .. g_{last}.
std::vector<Integer> gfl_terms(const GFLParams& params, std::int64_t last) {
  return terms({1, 1, params.p + 2 * params.q, params.q}, static_cast<std::size_t>(last + 1));
}

CodingMatrix matrix_at(const std::vector<Integer>& g, std::int64_t n) {
  const auto i = static_cast<std::size_t>(n);
  return CodingMatrix{{g[i + 1], g[i], g[i], g[i - 1]}};
}

}  // namespace

CodingMatrix build_Mn(const GFLParams& params, std::int64_t n) {
  if (n < 2) throw precondition_error("M_n needs n >= 2");
  return matrix_at(gfl_terms(params, n + 1), n);
}

IdentityReport check_prop34(const GFLParams& params, std::int64_t n) {
  if (n < 2) throw precondition_error("M_n needs n >= 2");
  const std::vector<Integer> g = gfl_terms(params, n + 1);
  const CodingMatrix M = matrix_at(g, n);
  const Integer& p = params.p;
  const Integer& q = params.q;
  const Integer right = sign_power(n - 1) * Integer(p * p + 5 * q * q + 5 * p * q);
  IdentityReport r;
  r.id = "prop34";
  r.param("p", to_string(p)).param("q", to_string(q)).param("n", n);
  r.left = to_string(M.det());
  r.right = to_string(right);
  r.pass = M.det() == right;
  if (n >= 4) {
    const CodingMatrix a = matrix_at(g, n - 1);
    const CodingMatrix b = matrix_at(g, n - 2);
    for (std::size_t k = 0; k < 4; ++k) {
      if (M.m[k] != a.m[k] + b.m[k]) {
        r.pass = false;
        r.left = "M_n entry " + std::to_string(k) + " = " + to_string(M.m[k]);
        r.right = to_string(Integer(a.m[k] + b.m[k]));
        break;
      }
    }
  }
  return r;
}

void validate(const CodecConfig& cfg) {
  if (cfg.n < 2) throw config_error("codec needs n >= 2");
  if (cfg.m < 2 || cfg.m > kMaxModulus) throw config_error("codec modulus must lie in [2, 2^32]");
  const Integer det = build_Mn({cfg.p, cfg.q}, cfg.n).det();
  Integer g;
  mpz_gcd_ui(g.get_mpz_t(), det.get_mpz_t(), cfg.m);
  if (g != 1) throw config_error("det M_n = " + to_string(det) + " is not prime to m = " + std::to_string(cfg.m));
}

Codec::Codec(const CodecConfig& cfg) : cfg_(cfg) {
  validate(cfg);
  const CodingMatrix M = build_Mn({cfg.p, cfg.q}, cfg.n);
  for (std::size_t k = 0; k < 4; ++k) mat_[k] = reduce(M.m[k], cfg.m);
  Integer det_inv;
  const Integer mod(static_cast<unsigned long>(cfg.m));
  mpz_invert(det_inv.get_mpz_t(), Integer(M.det()).get_mpz_t(), mod.get_mpz_t());
  const Integer adj[4] = {M.m[3], -M.m[1], -M.m[2], M.m[0]};
  for (std::size_t k = 0; k < 4; ++k) inv_[k] = reduce(Integer(adj[k] * det_inv), cfg.m);
}

Block Codec::mul(const Block& x, const Block& y) const {
  const std::uint64_t m = cfg_.m;
  auto dot = [m](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
    return (a * b % m + c * d % m) % m;
  };
  return {dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]), dot(x[2], y[0], x[3], y[2]),
          dot(x[2], y[1], x[3], y[3])};
}

std::uint64_t Codec::det(const Block& b) const {
  const std::uint64_t m = cfg_.m;
  return (b[0] * b[3] % m + m - b[1] * b[2] % m) % m;
}

EncodedBlock Codec::encode(const Block& block) const {
  for (auto v : block)
    if (v >= cfg_.m) throw precondition_error("block entry out of range");
  return {mul(block, mat_), det(block)};
}

DecodedBlock Codec::decode(const Block& cipher, std::uint64_t check) const {
  bool in_range = check < cfg_.m;
  Block c = cipher;
  for (auto& v : c) {
    if (v >= cfg_.m) {
      in_range = false;
      v %= cfg_.m;
    }
  }
  Block block = mul(c, inv_);
  return {block, !in_range || det(block) != check};
}

EncodedBlock encode_block(const Block& block, const CodecConfig& cfg) { return Codec(cfg).encode(block); }

DecodedBlock decode_block(const Block& cipher, std::uint64_t check, const CodecConfig& cfg) {
  return Codec(cfg).decode(cipher, check);
}

unsigned bytes_per_digit(std::uint64_t m) {
  unsigned k = 0;
  while (k < 4 && (std::uint64_t{1} << (8 * (k + 1))) <= m) ++k;
  return k;
}

std::vector<std::uint8_t> encode_stream(const std::vector<std::uint8_t>& payload, const CodecConfig& cfg) {
  if (cfg.m < 257) throw config_error("stream packing needs m >= 257");
  const Codec codec(cfg);
  const unsigned k = bytes_per_digit(cfg.m);
  const std::size_t per_block = 4 * k;
  const std::size_t blocks = (payload.size() + per_block - 1) / per_block;

  std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
  out.reserve(kHeaderSize + blocks * kBlockSize);
  out.push_back(kVersion);
  put_le(out, static_cast<std::uint64_t>(cfg.p), 8);
  put_le(out, static_cast<std::uint64_t>(cfg.q), 8);
  put_le(out, static_cast<std::uint64_t>(cfg.n), 8);
  put_le(out, cfg.m, 8);
  put_le(out, payload.size(), 8);

  for (std::size_t b = 0; b < blocks; ++b) {
    Block block{};
    for (std::size_t d = 0; d < 4; ++d) {
      std::uint64_t digit = 0;
      for (unsigned i = 0; i < k; ++i) {
        const std::size_t at = b * per_block + d * k + i;
        if (at < payload.size()) digit |= std::uint64_t{payload[at]} << (8 * i);
      }
      block[d] = digit;
    }
    const EncodedBlock e = codec.encode(block);
    for (auto v : e.cipher) put_le(out, v, 4);
    put_le(out, e.check, 4);
  }
  return out;
}

StreamDecode decode_stream(const std::vector<std::uint8_t>& frame, const std::optional<CodecConfig>& expected) {
  Reader in(frame);
  for (char c : kMagic)
    if (static_cast<char>(in.le(1, "magic")) != c) throw parse_error("bad magic", in.pos() - 1);
  const std::uint64_t version = in.le(1, "version");
  if (version != kVersion) throw parse_error("unsupported version " + std::to_string(version), in.pos() - 1);

  CodecConfig cfg;
  cfg.p = static_cast<std::int64_t>(in.le(8, "p"));
  cfg.q = static_cast<std::int64_t>(in.le(8, "q"));
  cfg.n = static_cast<std::int64_t>(in.le(8, "n"));
  cfg.m = in.le(8, "m");
  const std::size_t length_at = in.pos();
  const std::uint64_t length = in.le(8, "payload length");

  if (expected && (expected->p != cfg.p || expected->q != cfg.q || expected->n != cfg.n || expected->m != cfg.m))
    throw config_error("frame header does not match the requested configuration");
  if (cfg.m < 257 || cfg.m > kMaxModulus) throw parse_error("modulus out of range", length_at - 8);
  const Codec codec = [&] {
    try {
      return Codec(cfg);
    } catch (const config_error& e) {
      throw parse_error(std::string("invalid header: ") + e.what(), kHeaderSize - 8);
    }
  }();

  const unsigned k = bytes_per_digit(cfg.m);
  const std::size_t per_block = 4 * k;
  if (length > (frame.size() / kBlockSize + 1) * per_block) throw parse_error("payload length exceeds frame", length_at);
  const std::size_t blocks = (length + per_block - 1) / per_block;
  if (in.remaining() != blocks * kBlockSize) {
    const std::size_t expected_end = kHeaderSize + blocks * kBlockSize;
    throw parse_error(in.remaining() < blocks * kBlockSize ? "truncated block data" : "trailing bytes after last block",
                      std::min(frame.size(), expected_end));
  }

  StreamDecode result;
  result.config = cfg;
  result.payload.reserve(length);
  const std::uint64_t digit_limit = std::uint64_t{1} << (8 * k);
  for (std::size_t b = 0; b < blocks; ++b) {
    Block cipher;
    for (auto& v : cipher) v = in.le(4, "residue");
    const std::uint64_t check = in.le(4, "check");
    const DecodedBlock d = codec.decode(cipher, check);
    bool corrupt = d.corrupt;
    for (std::size_t j = 0; j < 4; ++j) {
      if (d.block[j] >= digit_limit) corrupt = true;
      for (unsigned i = 0; i < k; ++i) {
        const std::uint8_t byte = static_cast<std::uint8_t>(d.block[j] >> (8 * i));
        if (result.payload.size() < length) {
          result.payload.push_back(byte);
        } else if (byte != 0) {
          corrupt = true;
        }
      }
    }
    if (corrupt) result.corrupt_blocks.push_back(b);
  }
  return result;
}

DetectionStats measure_detection(const CodecConfig& cfg, std::uint64_t trials, std::uint64_t seed) {
  const Codec codec(cfg);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> residue(0, cfg.m - 1);
  std::uniform_int_distribution<std::uint64_t> shift(1, cfg.m - 1);
  std::uniform_int_distribution<int> slot(0, 4);

  DetectionStats stats;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Block block;
    for (auto& v : block) v = residue(rng);
    EncodedBlock e = codec.encode(block);
    const int s = slot(rng);
    std::uint64_t& target = s < 4 ? e.cipher[static_cast<std::size_t>(s)] : e.check;
    target = (target + shift(rng)) % cfg.m;
    const DecodedBlock d = codec.decode(e.cipher, e.check);
    ++stats.trials;
    if (d.corrupt) ++stats.flagged;
    if (!d.corrupt && codec.det(d.block) != e.check) ++stats.missed_determinant_changes;
  }
  return stats;
}

}  // namespace gfl
