#include <gtest/gtest.h>

#include <bit>
#include <cstring>
#include <filesystem>

#include "sqg/error.hpp"
#include "sqg/sqgf.hpp"
#include "test_util.hpp"

namespace sqg {
namespace {

using testing::Gen;
using testing::kTwoPi;

std::size_t offset_of(const std::vector<unsigned char>& bytes) {
  try {
    decode_field(bytes);
  } catch (const FormatError& e) {
    return e.offset();
  }
  ADD_FAILURE() << "expected FormatError";
  return 0;
}

void put_u32(std::vector<unsigned char>& b, std::size_t at, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) b[at + k] = static_cast<unsigned char>(v >> (8 * k));
}

TEST(Sqgf, HeaderLayout) {
  const Grid2D g(8, 2.5);
  const std::vector<unsigned char> b = encode_field(ScalarField(g));
  ASSERT_EQ(b.size(), kSqgfHeaderSize + 64 * 8);
  EXPECT_EQ(std::memcmp(b.data(), "SQGF", 4), 0);
  EXPECT_EQ(b[4], 1);
  EXPECT_EQ(b[5], 0);
  EXPECT_EQ(b[6], 8);
  EXPECT_EQ(b[7] | b[8] | b[9], 0);
  std::uint64_t bits = 0;
  for (int k = 0; k < 8; ++k) bits |= static_cast<std::uint64_t>(b[10 + k]) << (8 * k);
  EXPECT_EQ(std::bit_cast<double>(bits), 2.5);
}

TEST(Sqgf, RoundTripBitExactProperty) {
  Gen gen(109);
  for (int n : {8, 32, 64}) {
    const Grid2D g(n, gen.uniform(0.5, 10.0));
    ScalarField f = gen.field(g, 3);
    f.values()[0] = -0.0;
    f.values()[1] = 5e-324;
    f.values()[2] = 1.7976931348623157e308;
    const ScalarField back = decode_field(encode_field(f));
    EXPECT_EQ(back.grid().n_points(), n);
    EXPECT_EQ(back.grid().box_side(), g.box_side());
    ASSERT_EQ(std::memcmp(back.values().data(), f.values().data(), g.size() * sizeof(double)), 0);
  }
}

TEST(Sqgf, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "sqgf_file_round_trip";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "f.sqgf").string();
  const Grid2D g(16, kTwoPi);
  const ScalarField f = single_mode(g, 1, 2, ModeKind::sine);
  write_field(f, path);
  EXPECT_EQ(max_abs_difference(read_field(path), f), 0.0);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(read_field(path), IoError);
  EXPECT_THROW(write_field(f, (dir / "missing" / "f.sqgf").string()), IoError);
}

TEST(Sqgf, MalformedInputOffsets) {
  const Grid2D g(8, 1.0);
  const std::vector<unsigned char> good = encode_field(single_mode(g, 1, 0, ModeKind::cosine));

  std::vector<unsigned char> b(good.begin(), good.begin() + 10);
  EXPECT_EQ(offset_of(b), 10u);  // truncated header
  b.assign(good.begin(), good.end() - 3);
  EXPECT_EQ(offset_of(b), good.size() - 3);  // truncated payload

  b = good;
  b[0] = 'X';
  EXPECT_EQ(offset_of(b), 0u);
  b = good;
  b[4] = 2;
  EXPECT_EQ(offset_of(b), 4u);
  b = good;
  put_u32(b, 6, 0);
  EXPECT_EQ(offset_of(b), 6u);
  b = good;
  put_u32(b, 6, 12);
  EXPECT_EQ(offset_of(b), 6u);
  b = good;
  for (int k = 0; k < 8; ++k) b[10 + k] = 0;
  EXPECT_EQ(offset_of(b), 10u);
  b = good;
  b.push_back(0);
  EXPECT_EQ(offset_of(b), good.size());
  b = good;
  const std::uint64_t nan_bits = std::bit_cast<std::uint64_t>(std::numeric_limits<double>::quiet_NaN());
  for (int k = 0; k < 8; ++k) b[kSqgfHeaderSize + 8 * 5 + k] = static_cast<unsigned char>(nan_bits >> (8 * k));
  EXPECT_EQ(offset_of(b), kSqgfHeaderSize + 8 * 5);
  EXPECT_EQ(offset_of({}), 0u);
}

}  // namespace
}  // namespace sqg
