#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sqg/field.hpp"

namespace sqg {

/// SQGF layout, all little-endian and packed:
///   offset 0  magic "SQGF"
///   offset 4  u16 version (1)
///   offset 6  u32 n_points
///   offset 10 f64 box_side
///   offset 18 n_points^2 f64 values, row-major
inline constexpr std::uint16_t kSqgfVersion = 1;
inline constexpr std::size_t kSqgfHeaderSize = 18;

std::vector<unsigned char> encode_field(const ScalarField& f);
/// Throws FormatError with the offending byte offset.
ScalarField decode_field(const std::vector<unsigned char>& bytes);

/// Throws IoError when the file cannot be written or read.
void write_field(const ScalarField& f, const std::string& path);
ScalarField read_field(const std::string& path);

}  // namespace sqg
