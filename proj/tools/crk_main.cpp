// crk: compress, restore, inspect and benchmark BMP images with
// 4-connected crack coding.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crk/bench.hpp"
#include "crk/bmp.hpp"
#include "crk/codec.hpp"
#include "crk/container.hpp"
#include "crk/error.hpp"
#include "crk/report.hpp"
#include "crk/synth.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0   success\n"
    "  2   BadMagic                 input is not a BMP / CRK1 file\n"
    "  3   UnsupportedCompression   BMP compression field is nonzero\n"
    "  4   UnsupportedDepth         bits per pixel not in {1,4,8,24}\n"
    "  5   Truncated                file ends before its structures do\n"
    "  6   BadHeader                inconsistent header fields\n"
    "  7   InvalidImage             image invariant violated\n"
    "  8   WalkOutOfBounds          chain walk leaves the image\n"
    "  9   IncompleteCover          chains leave cells unwritten\n"
    "  10  OverlapWrite             chains write a cell twice\n"
    "  11  TooLarge                 dimension exceeds 65535\n"
    "  12  BoundsViolation          record starts outside the image\n"
    "  13  CoverageMismatch         records disagree with width*height\n"
    "  14  BadLength                inconsistent length field\n"
    "  15  BadSpec                  invalid generator spec\n"
    "  16  VerifyFailed             restored bytes differ from the original\n"
    "  17  IoError                  file could not be read or written\n";

std::vector<std::uint8_t> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        crk::fail(crk::ErrorCode::io_error, "cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad())
        crk::fail(crk::ErrorCode::io_error, "failed reading " + path.string());
    return bytes;
}

void write_file(const fs::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        crk::fail(crk::ErrorCode::io_error, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
    if (!out)
        crk::fail(crk::ErrorCode::io_error, "failed writing " + path.string());
}

std::string read_text_file(const fs::path& path) {
    const auto bytes = read_file(path);
    return std::string(bytes.begin(), bytes.end());
}

void print_bmp_headers(const crk::BmpImage& image) {
    const auto& fh = image.file_header;
    const auto& ih = image.info_header;
    std::printf("bfType            %u\n", fh.file_type);
    std::printf("bfSize            %u\n", fh.file_size);
    std::printf("bfReserved1       %u\n", fh.reserved1);
    std::printf("bfReserved2       %u\n", fh.reserved2);
    std::printf("bfOffBits         %u\n", fh.pixel_data_offset);
    std::printf("biSize            %u\n", ih.header_size);
    std::printf("biWidth           %d\n", ih.width);
    std::printf("biHeight          %d\n", ih.height);
    std::printf("biPlanes          %u\n", ih.planes);
    std::printf("biBitCount        %u\n", ih.bits_per_pixel);
    std::printf("biCompression     %u\n", ih.compression);
    std::printf("biSizeImage       %u\n", ih.image_data_size);
    std::printf("biXPelsPerMeter   %d\n", ih.x_pixels_per_meter);
    std::printf("biYPelsPerMeter   %d\n", ih.y_pixels_per_meter);
    std::printf("biClrUsed         %u\n", ih.colors_used);
    std::printf("biClrImportant    %u\n", ih.colors_important);
}

int cmd_compress(const fs::path& input, const fs::path& output) {
    const auto original = read_file(input);
    const crk::BmpImage image = crk::parse_bmp(original);

    const auto t0 = std::chrono::steady_clock::now();
    const crk::ChainSet chains = crk::encode(crk::matrix_of(image));
    const auto t1 = std::chrono::steady_clock::now();

    const auto stream = crk::serialize(chains, image);

    crk::CompressionReport report;
    report.original_size = original.size();
    report.compressed_size = stream.size();
    report.compression_percentage =
        crk::compression_percentage(report.original_size, report.compressed_size);
    report.computation_time = std::chrono::duration<double>(t1 - t0).count();
    // Prove the stream restores the input before writing anything.
    report.bytes_differed =
        crk::count_differing_bytes(original, crk::restore_file(crk::deserialize(stream)));

    write_file(output, stream);

    std::printf("original size:     %llu bytes\n",
                static_cast<unsigned long long>(report.original_size));
    std::printf("compressed size:   %llu bytes\n",
                static_cast<unsigned long long>(report.compressed_size));
    std::printf("compression:       %.2f%%\n", report.compression_percentage);
    std::printf("computation time:  %.6f s\n", report.computation_time);
    std::printf("bytes differed:    %llu\n",
                static_cast<unsigned long long>(report.bytes_differed));
    std::printf("CRK-REPORT file=%s original_size=%llu compressed_size=%llu "
                "compression_pct=%.2f time_s=%.6f bytes_differed=%llu "
                "chain_count=%zu code_count=%llu\n",
                input.filename().string().c_str(),
                static_cast<unsigned long long>(report.original_size),
                static_cast<unsigned long long>(report.compressed_size),
                report.compression_percentage, report.computation_time,
                static_cast<unsigned long long>(report.bytes_differed),
                chains.chains.size(),
                static_cast<unsigned long long>(crk::total_code_count(chains)));

    if (report.bytes_differed != 0) {
        std::cerr << "error: self-check failed, restored bytes differ\n";
        return int(crk::ErrorCode::verify_failed);
    }
    return 0;
}

int cmd_decompress(const fs::path& input, const fs::path& output,
                   const fs::path& verify_path) {
    const auto stream_bytes = read_file(input);
    const crk::CompressedStream stream = crk::deserialize(stream_bytes);
    const auto restored = crk::restore_file(stream);
    // All decoding happened in memory; only a fully restored file is written.
    write_file(output, restored);
    std::printf("restored %llu bytes to %s\n",
                static_cast<unsigned long long>(restored.size()),
                output.string().c_str());

    if (!verify_path.empty()) {
        const auto original = read_file(verify_path);
        const auto differed = crk::count_differing_bytes(original, restored);
        std::printf("bytes differed:    %llu\n",
                    static_cast<unsigned long long>(differed));
        if (differed != 0) {
            std::cerr << "error: restored file differs from " << verify_path.string()
                      << "\n";
            return int(crk::ErrorCode::verify_failed);
        }
    }
    return 0;
}

int cmd_inspect(const fs::path& input) {
    const auto bytes = read_file(input);
    if (crk::looks_like_stream(bytes)) {
        const crk::CompressedStream stream = crk::deserialize(bytes);
        std::printf("CRK1 stream: %ux%u, %u bits per pixel, %zu chains\n",
                    stream.width, stream.height, stream.bits_per_pixel,
                    stream.chains.chains.size());
        std::printf("embedded original header (%zu bytes):\n",
                    stream.original_header_blob.size());
        // The blob plus the restored pixel array is a complete BMP again.
        const crk::BmpImage image = crk::parse_bmp(crk::restore_file(stream));
        print_bmp_headers(image);
        std::printf("chains:\n%s",
                    crk::dump_text(stream.chains, stream.bits_per_pixel).c_str());
        return 0;
    }
    const crk::BmpImage image = crk::parse_bmp(bytes);
    print_bmp_headers(image);
    const crk::ChainSet chains = crk::encode(crk::matrix_of(image));
    std::printf("chains:\n%s",
                crk::dump_text(chains, image.info_header.bits_per_pixel).c_str());
    return 0;
}

int cmd_bench(const std::string& corpus_dir, const std::string& spec_path,
              const fs::path& out_csv, int runs) {
    std::vector<crk::BenchRow> rows;
    if (!corpus_dir.empty()) {
        if (!fs::is_directory(corpus_dir))
            crk::fail(crk::ErrorCode::io_error, corpus_dir + " is not a directory");
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(corpus_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".bmp")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& path : files) {
            try {
                const auto bytes = read_file(path);
                rows.push_back(
                    crk::bench_file_bytes(path.filename().string(), bytes, runs));
            } catch (const crk::Error& e) {
                crk::BenchRow row;
                row.name = path.filename().string();
                row.error = crk::error_name(e.code());
                rows.push_back(std::move(row));
            }
        }
    } else {
        const auto specs = crk::parse_spec_file(read_text_file(spec_path));
        for (const auto& spec : specs) {
            const auto bytes = crk::write_bmp(crk::generate_synthetic(spec));
            rows.push_back(crk::bench_file_bytes(spec.name, bytes, runs));
        }
    }
    const std::string csv = crk::to_csv(rows);
    write_file(out_csv,
               std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
    std::printf("wrote %zu rows to %s\n", rows.size(), out_csv.string().c_str());
    return 0;
}

int cmd_gen(const std::string& spec_path, const fs::path& out_dir) {
    const auto specs = crk::parse_spec_file(read_text_file(spec_path));
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        crk::fail(crk::ErrorCode::io_error, "cannot create " + out_dir.string());
    for (const auto& spec : specs) {
        const auto bytes = crk::write_bmp(crk::generate_synthetic(spec));
        write_file(out_dir / (spec.name + ".bmp"), bytes);
    }
    std::printf("generated %zu images in %s\n", specs.size(),
                out_dir.string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crk: lossless BMP compression with 4-connected crack coding"};
    app.require_subcommand(1);
    app.footer(kExitCodeHelp);

    std::string input, output, verify, corpus, spec, out;
    int runs = 5;

    auto* compress = app.add_subcommand("compress", "Compress a BMP into a CRK1 stream");
    compress->add_option("input", input, "input .bmp path")->required();
    compress->add_option("output", output, "output .crk path")->required();

    auto* decompress =
        app.add_subcommand("decompress", "Restore the original BMP from a CRK1 stream");
    decompress->add_option("input", input, "input .crk path")->required();
    decompress->add_option("output", output, "output .bmp path")->required();
    decompress->add_option("--verify", verify,
                           "original file; fail unless the restoration matches it");

    auto* inspect =
        app.add_subcommand("inspect", "Print header fields and the chain text dump");
    inspect->add_option("input", input, "a .bmp or .crk path")->required();

    auto* bench = app.add_subcommand("bench", "Benchmark a corpus and write a CSV");
    auto* corpus_opt = bench->add_option("--corpus", corpus, "directory of .bmp files");
    auto* spec_opt = bench->add_option("--spec", spec, "JSON generator spec file");
    corpus_opt->excludes(spec_opt);
    bench->add_option("--out", out, "output CSV path")->required();
    bench->add_option("--runs", runs, "timing runs per file (median is reported)")
        ->default_val(5);

    auto* gen = app.add_subcommand("gen", "Generate BMPs from a JSON spec file");
    gen->add_option("--spec", spec, "JSON generator spec file")->required();
    gen->add_option("--out", out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(compress))
            return cmd_compress(input, output);
        if (app.got_subcommand(decompress))
            return cmd_decompress(input, output, verify);
        if (app.got_subcommand(inspect))
            return cmd_inspect(input);
        if (app.got_subcommand(bench)) {
            if (corpus.empty() == spec.empty())
                crk::fail(crk::ErrorCode::bad_spec,
                          "bench needs exactly one of --corpus and --spec");
            return cmd_bench(corpus, spec, out, runs);
        }
        if (app.got_subcommand(gen))
            return cmd_gen(spec, out);
    } catch (const crk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
