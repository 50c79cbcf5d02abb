#pragma once
// The CRK1 compressed container. All integers little-endian:
//
//   magic "CRK1" | width u32 | height u32 | bits_per_pixel u8
//   | blob_len u32 | blob (the source BMP's first pixel_data_offset bytes)
//   | chain_count u32 | chain records
//
// Each record: row u16 | col u16 | value (1 byte indexed, 3 bytes R,G,B
// at 24 bpp) | code_count u32 | ceil(code_count/4) packed code bytes.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "crk/bmp.hpp"
#include "crk/codec.hpp"

namespace crk {

inline constexpr std::uint8_t kStreamMagic[4] = {'C', 'R', 'K', '1'};

struct CompressedStream {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint16_t bits_per_pixel = 0;
    std::vector<std::uint8_t> original_header_blob;
    ChainSet chains;
};

// Chains must have been produced from the source's matrix. Throws
// too_large when a dimension exceeds 65535.
std::vector<std::uint8_t> serialize(const ChainSet& chains, const BmpImage& source);

// Validates magic, depth, record bounds, blob consistency and the
// coverage sum before returning. Throws bad_magic, truncated,
// unsupported_depth, too_large, bad_header, bounds_violation,
// coverage_mismatch or bad_length.
CompressedStream deserialize(std::span<const std::uint8_t> bytes);

// Rebuilds the original file: header blob followed by the restored pixel
// array.
std::vector<std::uint8_t> restore_file(const CompressedStream& stream);

// One line per chain: "row col value code code ... -1". 24-bit values
// print as R,G,B.
std::string dump_text(const ChainSet& chains, std::uint16_t bits_per_pixel);

bool looks_like_stream(std::span<const std::uint8_t> bytes);

} // namespace crk
