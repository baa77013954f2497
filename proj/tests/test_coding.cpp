#include <doctest.h>

#include "gfl/coding.hpp"
#include "support.hpp"

using namespace gfl;

namespace {

std::vector<std::uint8_t> random_bytes(test::Gen& g, std::size_t n) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(g.integer(0, 255));
  return out;
}

// Residues laid out after the 45-byte header, 5 per block, u32 little-endian.
std::size_t residue_offset(std::size_t block, std::size_t slot) { return 45 + 20 * block + 4 * slot; }

std::uint32_t read_u32(const std::vector<std::uint8_t>& f, std::size_t at) {
  return static_cast<std::uint32_t>(f[at]) | static_cast<std::uint32_t>(f[at + 1]) << 8 |
         static_cast<std::uint32_t>(f[at + 2]) << 16 | static_cast<std::uint32_t>(f[at + 3]) << 24;
}

void write_u32(std::vector<std::uint8_t>& f, std::size_t at, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) f[at + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v >> (8 * i));
}

}  // namespace

TEST_CASE("build_Mn examples") {
  CHECK(build_Mn({1, 0}, 2) == CodingMatrix{{1, 1, 1, 0}});
  const CodingMatrix m = build_Mn({1, 1}, 2);
  CHECK(m == CodingMatrix{{5, 4, 4, 1}});
  CHECK(m.det() == -11);
  CHECK(build_Mn({0, 0}, 9).det() == 0);
  CHECK_THROWS_AS(build_Mn({1, 1}, 1), precondition_error);
}

TEST_CASE("property: Prop 3.4 on the box") {
  for (int p = -10; p <= 10; ++p)
    for (int q = -10; q <= 10; ++q) {
      const Integer base(p * p + 5 * q * q + 5 * p * q);
      for (std::int64_t n = 2; n <= 200; n += 7) {
        CHECK(build_Mn({p, q}, n).det() == (n % 2 ? base : Integer(-base)));
        CHECK(check_prop34({p, q}, n).pass);
        if (n >= 4) {
          const CodingMatrix a = build_Mn({p, q}, n), b = build_Mn({p, q}, n - 1), c = build_Mn({p, q}, n - 2);
          for (std::size_t k = 0; k < 4; ++k) CHECK(a.m[k] == b.m[k] + c.m[k]);
        }
      }
    }
}

TEST_CASE("validate") {
  CHECK_NOTHROW(validate({}));
  CHECK_THROWS_AS(validate({1, 0, 1, 65521}), config_error);
  CHECK_THROWS_AS(validate({1, 0, 2, 1}), config_error);
  CHECK_THROWS_AS(validate({1, 0, 2, (std::uint64_t{1} << 32) + 1}), config_error);
  // det M_2^{1,1} = -11.
  CHECK_THROWS_AS(validate({1, 1, 2, 22}), config_error);
  CHECK_NOTHROW(validate({1, 1, 2, 21}));
  CHECK_THROWS_AS(validate({0, 0, 2, 65521}), config_error);
}

TEST_CASE("block examples") {
  const CodecConfig cfg{1, 0, 2, 251};
  const EncodedBlock e = encode_block({1, 2, 3, 4}, cfg);
  CHECK(e.cipher == Block{3, 1, 7, 3});
  CHECK(e.check == 249);
  const DecodedBlock d = decode_block(e.cipher, e.check, cfg);
  CHECK(d.block == Block{1, 2, 3, 4});
  CHECK_FALSE(d.corrupt);
  CHECK(Codec(cfg).inverse() == Block{0, 1, 1, 250});

  CHECK(encode_block({0, 0, 0, 0}, cfg).cipher == Block{0, 0, 0, 0});
  CHECK(encode_block({0, 0, 0, 0}, cfg).check == 0);
  const DecodedBlock z = decode_block({0, 0, 0, 0}, 0, cfg);
  CHECK(z.block == Block{0, 0, 0, 0});
  CHECK_FALSE(z.corrupt);

  const CodecConfig big{2, 3, 7, 65521};
  CHECK(encode_block({1, 0, 0, 1}, big).cipher == Codec(big).matrix());

  Block flipped = e.cipher;
  flipped[2] = (flipped[2] + 1) % 251;
  CHECK(decode_block(flipped, e.check, cfg).corrupt);
  CHECK_THROWS_AS(encode_block({251, 0, 0, 0}, cfg), precondition_error);
}

TEST_CASE("bytes per digit") {
  CHECK(bytes_per_digit(257) == 1);
  CHECK(bytes_per_digit(65521) == 1);
  CHECK(bytes_per_digit(65537) == 2);
  CHECK(bytes_per_digit(std::uint64_t{1} << 32) == 4);
}

TEST_CASE("stream examples") {
  const CodecConfig cfg;
  const auto empty = encode_stream({}, cfg);
  CHECK(empty.size() == 45);
  CHECK(std::string(empty.begin(), empty.begin() + 4) == "GFLC");
  const StreamDecode e = decode_stream(empty);
  CHECK(e.payload.empty());
  CHECK(e.clean());
  CHECK(e.config.m == 65521);

  // All-zero bytes give zero blocks with zero check residues.
  const std::vector<std::uint8_t> zeros(13, 0);
  const auto zf = encode_stream(zeros, cfg);
  CHECK(zf.size() == 45 + 4 * 20);
  for (std::size_t i = 45; i < zf.size(); ++i) CHECK(zf[i] == 0);
  CHECK(decode_stream(zf).payload == zeros);

  const std::vector<std::uint8_t> eight{1, 2, 3, 4, 250, 251, 252, 253};
  CHECK(decode_stream(encode_stream(eight, cfg)).payload == eight);

  CHECK_THROWS_AS(encode_stream(eight, {1, 0, 2, 251}), config_error);
  CHECK_THROWS_AS(decode_stream(encode_stream(eight, cfg), CodecConfig{1, 0, 3, 65521}), config_error);
}

TEST_CASE("malformed frames") {
  const auto frame = encode_stream({9, 8, 7, 6, 5}, CodecConfig{});
  for (std::size_t cut : {std::size_t{0}, std::size_t{3}, std::size_t{20}, std::size_t{44}, frame.size() - 1}) {
    const std::vector<std::uint8_t> part(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(cut));
    CHECK_THROWS_AS(decode_stream(part), parse_error);
  }
  auto bad = frame;
  bad[0] = 'X';
  try {
    decode_stream(bad);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset == 0);
  }
  bad = frame;
  bad[4] = 2;
  CHECK_THROWS_AS(decode_stream(bad), parse_error);
  bad = frame;
  bad.push_back(0);
  CHECK_THROWS_AS(decode_stream(bad), parse_error);
  // n = 1 in the header.
  bad = frame;
  bad[21] = 1;
  CHECK_THROWS_AS(decode_stream(bad), parse_error);
}

TEST_CASE("a flipped residue marks its block") {
  test::Gen g(61);
  const auto payload = random_bytes(g, 100);
  const auto frame = encode_stream(payload, CodecConfig{});
  for (std::size_t block : {std::size_t{0}, std::size_t{7}, std::size_t{24}})
    for (std::size_t slot = 0; slot < 5; ++slot) {
      auto f = frame;
      const std::size_t at = residue_offset(block, slot);
      write_u32(f, at, (read_u32(f, at) + 1) % 65521);
      const StreamDecode d = decode_stream(f);
      CHECK(d.corrupt_blocks == std::vector<std::size_t>{block});
    }
}

TEST_CASE("property: stream round trip over random payloads and configs") {
  test::Gen g(62);
  const std::vector<CodecConfig> cfgs{{}, {1, 1, 5, 65537}, {2, -3, 9, 4294967291ULL}, {-4, 1, 3, 257}};
  for (const auto& cfg : cfgs)
    for (int trial = 0; trial < 40; ++trial) {
      const auto payload = random_bytes(g, static_cast<std::size_t>(g.integer(0, 700)));
      const auto frame = encode_stream(payload, cfg);
      const StreamDecode d = decode_stream(frame, cfg);
      CHECK(d.payload == payload);
      CHECK(d.clean());
    }
}

TEST_CASE("property: block decode inverts encode and det is preserved") {
  test::Gen g(63);
  for (int trial = 0; trial < 500; ++trial) {
    CodecConfig cfg{g.integer(-6, 6), g.integer(-6, 6), g.integer(2, 30), 65521};
    try {
      validate(cfg);
    } catch (const config_error&) {
      continue;
    }
    const Codec codec(cfg);
    Block b;
    for (auto& v : b) v = static_cast<std::uint64_t>(g.integer(0, 65520));
    const EncodedBlock e = codec.encode(b);
    // det(B M) = det B det M, computed with big integers.
    const Integer detM = build_Mn({cfg.p, cfg.q}, cfg.n).det();
    const Integer detB = Integer(static_cast<unsigned long>(b[0])) * static_cast<unsigned long>(b[3]) -
                         Integer(static_cast<unsigned long>(b[1])) * static_cast<unsigned long>(b[2]);
    const Integer detC = Integer(static_cast<unsigned long>(e.cipher[0])) * static_cast<unsigned long>(e.cipher[3]) -
                         Integer(static_cast<unsigned long>(e.cipher[1])) * static_cast<unsigned long>(e.cipher[2]);
    Integer diff = detC - detB * detM;
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 65521) != 0);
    const DecodedBlock d = codec.decode(e.cipher, e.check);
    CHECK(d.block == b);
    CHECK_FALSE(d.corrupt);
  }
}

TEST_CASE("measure_detection") {
  const DetectionStats s = measure_detection(CodecConfig{}, 20000, 7);
  CHECK(s.trials == 20000);
  CHECK(s.missed_determinant_changes == 0);
  CHECK(s.flagged <= s.trials);
  MESSAGE("detection rate " << s.rate());
}
