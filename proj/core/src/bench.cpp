#include "crk/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "crk/bmp.hpp"
#include "crk/codec.hpp"
#include "crk/container.hpp"
#include "crk/error.hpp"
#include "crk/report.hpp"
#include "crk/rle.hpp"

namespace crk {

namespace {

double median(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    return n % 2 == 1 ? samples[n / 2]
                      : (samples[n / 2 - 1] + samples[n / 2]) / 2.0;
}

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

} // namespace

BenchRow bench_file_bytes(const std::string& name,
                          std::span<const std::uint8_t> file_bytes, int timing_runs) {
    BenchRow row;
    row.name = name;
    try {
        const BmpImage image = parse_bmp(file_bytes);
        row.original_size = file_bytes.size();

        // Wall clock around encode only, median over timing_runs.
        using clock = std::chrono::steady_clock;
        if (timing_runs < 1)
            timing_runs = 1;
        std::vector<double> times;
        times.reserve(std::size_t(timing_runs));
        ChainSet chains;
        for (int run = 0; run < timing_runs; ++run) {
            const auto t0 = clock::now();
            chains = encode(matrix_of(image));
            const auto t1 = clock::now();
            times.push_back(std::chrono::duration<double>(t1 - t0).count());
        }
        row.time_s = median(std::move(times));

        const auto stream_bytes = serialize(chains, image);
        row.compressed_size = stream_bytes.size();
        row.compression_pct = compression_percentage(row.original_size, row.compressed_size);
        row.chain_count = chains.chains.size();
        row.code_count = total_code_count(chains);

        const auto restored = restore_file(deserialize(stream_bytes));
        row.bytes_differed = count_differing_bytes(file_bytes, restored);

        if (image.info_header.bits_per_pixel == 8) {
            const auto rle = rle_baseline_encode(matrix_of(image), 8);
            row.rle_size = rle.size();
            row.rle_pct = compression_percentage(row.original_size, row.rle_size);
            row.has_rle = true;
        }
    } catch (const Error& e) {
        row.error = error_name(e.code());
    }
    return row;
}

const char* csv_header() {
    return "name,original_size,compressed_size,compression_pct,time_s,"
           "bytes_differed,chain_count,code_count,rle_size,rle_pct,error";
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::string out = csv_header();
    out += '\n';
    for (const BenchRow& row : rows) {
        out += row.name;
        if (!row.error.empty()) {
            out += ",,,,,,,,,,";
            out += row.error;
            out += '\n';
            continue;
        }
        out += ',' + std::to_string(row.original_size);
        out += ',' + std::to_string(row.compressed_size);
        out += ',' + format_fixed(row.compression_pct, 2);
        out += ',' + format_fixed(row.time_s, 6);
        out += ',' + std::to_string(row.bytes_differed);
        out += ',' + std::to_string(row.chain_count);
        out += ',' + std::to_string(row.code_count);
        if (row.has_rle) {
            out += ',' + std::to_string(row.rle_size);
            out += ',' + format_fixed(row.rle_pct, 2);
        } else {
            out += ",,";
        }
        out += ",\n";
    }
    return out;
}

} // namespace crk
