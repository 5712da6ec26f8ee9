#include "sqg/sqgf.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "sqg/error.hpp"

namespace sqg {

namespace {

template <class U>
void put_le(std::vector<unsigned char>& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

template <class U>
U get_le(const std::vector<unsigned char>& in, std::size_t offset) {
  U v = 0;
  for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(in[offset + i]) << (8 * i);
  return v;
}

void require_bytes(const std::vector<unsigned char>& in, std::size_t offset, std::size_t count,
                   const char* what) {
  if (in.size() < offset + count) {
    throw FormatError(std::string("truncated SQGF file while reading ") + what, in.size());
  }
}

}  // namespace

std::vector<unsigned char> encode_field(const ScalarField& f) {
  std::vector<unsigned char> out;
  out.reserve(kSqgfHeaderSize + 8 * f.size());
  for (char c : {'S', 'Q', 'G', 'F'}) out.push_back(static_cast<unsigned char>(c));
  put_le<std::uint16_t>(out, kSqgfVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(f.grid().n_points()));
  put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(f.grid().box_side()));
  for (double v : f.values()) put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(v));
  return out;
}

ScalarField decode_field(const std::vector<unsigned char>& in) {
  require_bytes(in, 0, 4, "magic");
  if (std::memcmp(in.data(), "SQGF", 4) != 0) throw FormatError("bad SQGF magic", 0);
  require_bytes(in, 4, 2, "version");
  const auto version = get_le<std::uint16_t>(in, 4);
  if (version != kSqgfVersion) {
    throw FormatError("unsupported SQGF version " + std::to_string(version), 4);
  }
  require_bytes(in, 6, 4, "n_points");
  const auto n = get_le<std::uint32_t>(in, 6);
  if (n < 8 || n > (1u << 15) || (n & (n - 1)) != 0) {
    throw FormatError("invalid n_points " + std::to_string(n), 6);
  }
  require_bytes(in, 10, 8, "box_side");
  const double side = std::bit_cast<double>(get_le<std::uint64_t>(in, 10));
  if (!std::isfinite(side) || !(side > 0.0)) throw FormatError("invalid box_side", 10);

  const std::size_t count = static_cast<std::size_t>(n) * n;
  require_bytes(in, kSqgfHeaderSize, 8 * count, "values");
  if (in.size() != kSqgfHeaderSize + 8 * count) {
    throw FormatError("trailing bytes after SQGF payload", kSqgfHeaderSize + 8 * count);
  }
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t off = kSqgfHeaderSize + 8 * i;
    values[i] = std::bit_cast<double>(get_le<std::uint64_t>(in, off));
    if (!std::isfinite(values[i])) throw FormatError("non-finite value", off);
  }
  return ScalarField(Grid2D(static_cast<int>(n), side), std::move(values));
}

void write_field(const ScalarField& f, const std::string& path) {
  const std::vector<unsigned char> bytes = encode_field(f);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw IoError("write failed: " + path);
}

ScalarField read_field(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path + " for reading");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
  return decode_field(bytes);
}

}  // namespace sqg
