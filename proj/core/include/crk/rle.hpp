#pragma once
// Per-row run-length baseline (count byte 1-255 + value byte), used for
// the benchmark comparison columns. 8-bit matrices only; runs never cross
// row boundaries.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crk/bmp.hpp"

namespace crk {

std::vector<std::uint8_t> rle_baseline_encode(const PixelMatrix& matrix,
                                              std::uint16_t bits_per_pixel);

PixelMatrix rle_baseline_decode(std::span<const std::uint8_t> bytes,
                                std::size_t rows, std::size_t cols);

} // namespace crk
