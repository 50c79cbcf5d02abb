#pragma once
// Per-file benchmark: compress, restore, compare, plus the RLE baseline.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace crk {

struct BenchRow {
    std::string name;
    std::uint64_t original_size = 0;
    std::uint64_t compressed_size = 0;
    double compression_pct = 0.0;
    double time_s = 0.0; // median encode time over timing_runs
    std::uint64_t bytes_differed = 0;
    std::uint64_t chain_count = 0;
    std::uint64_t code_count = 0;
    std::uint64_t rle_size = 0;
    double rle_pct = 0.0;
    bool has_rle = false;      // baseline runs on 8-bit images only
    std::string error;         // error class name when the file failed
};

// Never throws for per-file codec errors; they land in row.error and the
// remaining fields stay zero.
BenchRow bench_file_bytes(const std::string& name,
                          std::span<const std::uint8_t> file_bytes,
                          int timing_runs = 5);

const char* csv_header();
std::string to_csv(const std::vector<BenchRow>& rows);

} // namespace crk
