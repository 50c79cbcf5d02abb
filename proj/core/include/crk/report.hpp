#pragma once

#include <cstdint>
#include <span>

namespace crk {

// The five per-file metrics of a compression run.
struct CompressionReport {
    std::uint64_t original_size = 0;
    std::uint64_t compressed_size = 0;
    double compression_percentage = 0.0;
    double computation_time = 0.0; // seconds, encode only
    std::uint64_t bytes_differed = 0;
};

// (1 - compressed/original) * 100. Negative for incompressible inputs.
double compression_percentage(std::uint64_t original_size, std::uint64_t compressed_size);

// Number of positions where the two buffers disagree; a length difference
// counts each surplus byte as differed.
std::uint64_t count_differing_bytes(std::span<const std::uint8_t> a,
                                    std::span<const std::uint8_t> b);

} // namespace crk
