// Black-box tests for the crk command line tool. argv[1] is the path to
// the built binary; everything runs in a scratch directory under the
// system temp dir.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "crk/bmp.hpp"
#include "crk/codec.hpp"
#include "crk/container.hpp"
#include "crk/error.hpp"
#include "crk/synth.hpp"
#include "support/fixtures.hpp"

#ifndef _WIN32
#include <unistd.h>
#endif

namespace fs = std::filesystem;

namespace {

int tests_run = 0;
int tests_passed = 0;
std::string cli;
fs::path work;

void check(bool ok, const std::string& name, const std::string& detail = "") {
    ++tests_run;
    if (ok) {
        ++tests_passed;
        std::cout << "  ok: " << name << "\n";
    } else {
        std::cout << "  FAIL: " << name;
        if (!detail.empty())
            std::cout << " (" << detail << ")";
        std::cout << "\n";
    }
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const fs::path log = work / "run.log";
    const std::string command =
        "\"" + cli + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(command.c_str());
    RunResult result;
#ifdef _WIN32
    result.exit_code = status;
#else
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream in(log);
    result.output.assign(std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>());
    return result;
}

void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
}

std::vector<std::uint8_t> read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
}

std::string quoted(const fs::path& path) {
    return "\"" + path.string() + "\"";
}

void test_round_trip_and_reports() {
    crk::SyntheticSpec spec;
    spec.width = 50;
    spec.height = 40;
    spec.kind = crk::GeneratorKind::blobs;
    spec.region_count = 5;
    spec.seed = 7;
    const auto original = crk::write_bmp(crk::generate_synthetic(spec));
    const fs::path bmp = work / "blobs.bmp";
    const fs::path crk_file = work / "blobs.crk";
    const fs::path restored = work / "blobs_restored.bmp";
    write_bytes(bmp, original);

    auto compress = run("compress " + quoted(bmp) + " " + quoted(crk_file));
    check(compress.exit_code == 0, "compress exits 0", compress.output);
    check(compress.output.find("CRK-REPORT ") != std::string::npos &&
              compress.output.find("bytes_differed=0") != std::string::npos,
          "compress prints the machine-parsable report line");
    check(compress.output.find("bytes differed:    0") != std::string::npos,
          "compress prints the human report");

    auto decompress = run("decompress " + quoted(crk_file) + " " + quoted(restored) +
                          " --verify " + quoted(bmp));
    check(decompress.exit_code == 0, "decompress --verify exits 0", decompress.output);
    check(read_bytes(restored) == original, "restored file is byte-identical");
}

void test_inspect() {
    const auto tiny = testsupport::build_indexed_bmp(
        8, 1, 1, [](std::uint32_t, std::uint32_t) { return std::uint8_t(7); });
    const fs::path bmp = work / "tiny.bmp";
    write_bytes(bmp, tiny);

    auto inspect = run("inspect " + quoted(bmp));
    check(inspect.exit_code == 0, "inspect exits 0 on a BMP");
    check(inspect.output.find("0 0 7 -1\n") != std::string::npos,
          "inspect dumps the single chain", inspect.output);
    check(inspect.output.find("bfType            19778") != std::string::npos &&
              inspect.output.find("biBitCount        8") != std::string::npos,
          "inspect prints header fields by name");

    // A 4x8 image whose first traced chain reproduces the documented dump
    // line: a 200-valued region snaking down, right and back left.
    crk::PixelMatrix m(4, 8);
    crk::PixelValue filler = 1;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            m(r, c) = (filler++ % 99) + 1;
    const std::pair<int, int> region[] = {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
                                          {1, 4}, {1, 5}, {2, 5}, {2, 4}, {2, 3}};
    for (const auto& [r, c] : region)
        m(std::size_t(r), std::size_t(c)) = 200;
    std::vector<crk::PaletteEntry> palette(256);
    for (int i = 0; i < 256; ++i)
        palette[std::size_t(i)] = {std::uint8_t(i), std::uint8_t(i), std::uint8_t(i), 0};
    const fs::path sample = work / "sample.bmp";
    write_bytes(sample, crk::write_bmp(crk::make_bmp(m, 8, palette)));

    auto dump = run("inspect " + quoted(sample));
    check(dump.output.find("chains:\n0 0 200 3 2 2 2 2 2 3 0 0 -1\n") !=
              std::string::npos,
          "first dump line matches the documented sample", dump.output);

    // Inspect accepts streams too.
    const fs::path stream_path = work / "tiny.crk";
    run("compress " + quoted(bmp) + " " + quoted(stream_path));
    auto stream_inspect = run("inspect " + quoted(stream_path));
    check(stream_inspect.exit_code == 0, "inspect exits 0 on a stream");
    check(stream_inspect.output.find("CRK1 stream: 1x1") != std::string::npos &&
              stream_inspect.output.find("0 0 7 -1\n") != std::string::npos,
          "stream inspect shows dimensions and chains", stream_inspect.output);
}

void test_error_exit_codes() {
    const auto good = testsupport::build_indexed_bmp(
        8, 2, 2, [](std::uint32_t, std::uint32_t) { return std::uint8_t(1); });

    auto corrupt = good;
    corrupt[1] = 'A';
    write_bytes(work / "bad_magic.bmp", corrupt);
    check(run("compress " + quoted(work / "bad_magic.bmp") + " " +
              quoted(work / "x.crk")).exit_code == 2,
          "BadMagic maps to exit 2");

    auto rle_flag = good;
    rle_flag[30] = 1;
    write_bytes(work / "rle.bmp", rle_flag);
    check(run("compress " + quoted(work / "rle.bmp") + " " +
              quoted(work / "x.crk")).exit_code == 3,
          "UnsupportedCompression maps to exit 3");

    auto deep = good;
    deep[28] = 32;
    write_bytes(work / "deep.bmp", deep);
    check(run("compress " + quoted(work / "deep.bmp") + " " +
              quoted(work / "x.crk")).exit_code == 4,
          "UnsupportedDepth maps to exit 4");

    auto planes = good;
    planes[26] = 3;
    write_bytes(work / "planes.bmp", planes);
    check(run("compress " + quoted(work / "planes.bmp") + " " +
              quoted(work / "x.crk")).exit_code == 6,
          "BadHeader maps to exit 6");

    // A valid stream, then corrupted variants for decompress.
    write_bytes(work / "ok.bmp", good);
    run("compress " + quoted(work / "ok.bmp") + " " + quoted(work / "ok.crk"));
    auto stream = read_bytes(work / "ok.crk");

    auto flipped = stream;
    flipped[0] = 'X';
    write_bytes(work / "flipped.crk", flipped);
    check(run("decompress " + quoted(work / "flipped.crk") + " " +
              quoted(work / "y.bmp")).exit_code == 2,
          "stream BadMagic maps to exit 2");

    auto truncated = stream;
    truncated.resize(stream.size() - 1);
    write_bytes(work / "truncated.crk", truncated);
    const fs::path never_written = work / "never.bmp";
    auto trunc = run("decompress " + quoted(work / "truncated.crk") + " " +
                     quoted(never_written));
    check(trunc.exit_code == 5, "Truncated maps to exit 5");
    check(!fs::exists(never_written), "no partial output file is left behind");

    // Coverage hole: drop one code and reserialize.
    const crk::BmpImage image = crk::parse_bmp(good);
    crk::ChainSet chains = crk::encode(crk::matrix_of(image));
    chains.chains[0].codes.pop_back();
    write_bytes(work / "hole.crk", crk::serialize(chains, image));
    check(run("decompress " + quoted(work / "hole.crk") + " " +
              quoted(work / "z.bmp")).exit_code == 13,
          "CoverageMismatch maps to exit 13");

    // Verification against the wrong original.
    auto other = testsupport::build_indexed_bmp(
        8, 2, 2, [](std::uint32_t, std::uint32_t) { return std::uint8_t(2); });
    write_bytes(work / "other.bmp", other);
    check(run("decompress " + quoted(work / "ok.crk") + " " + quoted(work / "v.bmp") +
              " --verify " + quoted(work / "other.bmp")).exit_code == 16,
          "VerifyFailed maps to exit 16");

    check(run("compress " + quoted(work / "missing.bmp") + " " +
              quoted(work / "x.crk")).exit_code == 17,
          "IoError maps to exit 17");

    write_bytes(work / "bad.json", {'x'});
    check(run("gen --spec " + quoted(work / "bad.json") + " --out " +
              quoted(work / "gen_out")).exit_code == 15,
          "BadSpec maps to exit 15");

    auto help = run("--help");
    check(help.output.find("VerifyFailed") != std::string::npos &&
              help.output.find("16") != std::string::npos &&
              help.output.find("CoverageMismatch") != std::string::npos,
          "--help documents the exit codes");
}

void test_gen_and_bench() {
    const std::string spec_json = R"([
        {"name": "u", "width": 16, "height": 16, "kind": "uniform", "seed": 1},
        {"name": "n", "width": 16, "height": 16, "kind": "noise", "seed": 2},
        {"name": "c24", "width": 9, "height": 5, "kind": "checker",
         "depth": 24, "seed": 3}
    ])";
    const fs::path spec_path = work / "corpus.json";
    std::ofstream(spec_path) << spec_json;

    const fs::path gen_dir = work / "corpus";
    auto gen = run("gen --spec " + quoted(spec_path) + " --out " + quoted(gen_dir));
    check(gen.exit_code == 0, "gen exits 0", gen.output);
    check(fs::exists(gen_dir / "u.bmp") && fs::exists(gen_dir / "n.bmp") &&
              fs::exists(gen_dir / "c24.bmp"),
          "gen writes one BMP per spec entry");

    const fs::path csv1 = work / "bench1.csv";
    const fs::path csv2 = work / "bench2.csv";
    auto bench = run("bench --spec " + quoted(spec_path) + " --out " + quoted(csv1) +
                     " --runs 3");
    check(bench.exit_code == 0, "bench --spec exits 0", bench.output);
    run("bench --spec " + quoted(spec_path) + " --out " + quoted(csv2) + " --runs 3");

    std::ifstream csv_in(csv1);
    std::string header;
    std::getline(csv_in, header);
    check(header ==
              "name,original_size,compressed_size,compression_pct,time_s,"
              "bytes_differed,chain_count,code_count,rle_size,rle_pct,error",
          "CSV header row is pinned", header);
    std::vector<std::string> lines;
    for (std::string line; std::getline(csv_in, line);)
        lines.push_back(line);
    check(lines.size() == 3, "one CSV row per image");
    check(lines[0].rfind("u,", 0) == 0 && lines[0].find(",0,") != std::string::npos,
          "row order follows the spec file");

    // Rows are reproducible up to the timing column (column 5).
    auto strip_time = [](const fs::path& path) {
        std::ifstream in(path);
        std::string text, line;
        while (std::getline(in, line)) {
            int commas = 0;
            std::string kept;
            for (const char ch : line) {
                if (ch == ',')
                    ++commas;
                if (!(commas == 4 && ch != ','))
                    kept += ch; // keep everything except the time cell
            }
            text += kept + "\n";
        }
        return text;
    };
    check(strip_time(csv1) == strip_time(csv2),
          "repeated bench runs differ only in timings");

    // Corpus-directory mode over the generated files.
    const fs::path csv3 = work / "bench3.csv";
    auto corpus_bench = run("bench --corpus " + quoted(gen_dir) + " --out " + quoted(csv3));
    check(corpus_bench.exit_code == 0, "bench --corpus exits 0", corpus_bench.output);
    std::ifstream csv3_in(csv3);
    std::string text((std::istreambuf_iterator<char>(csv3_in)),
                     std::istreambuf_iterator<char>());
    check(text.find("u.bmp,") != std::string::npos &&
              text.find("c24.bmp,") != std::string::npos,
          "corpus bench covers the directory");

    const fs::path empty_dir = work / "empty";
    fs::create_directories(empty_dir);
    const fs::path csv4 = work / "bench4.csv";
    run("bench --corpus " + quoted(empty_dir) + " --out " + quoted(csv4));
    std::ifstream csv4_in(csv4);
    std::string empty_text((std::istreambuf_iterator<char>(csv4_in)),
                           std::istreambuf_iterator<char>());
    check(empty_text ==
              "name,original_size,compressed_size,compression_pct,time_s,"
              "bytes_differed,chain_count,code_count,rle_size,rle_pct,error\n",
          "empty corpus produces a header-only CSV", empty_text);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: crk_cli_tests <path-to-crk-binary>\n";
        return 2;
    }
    cli = argv[1];
    work = fs::temp_directory_path() /
           ("crk_cli_tests_" + std::to_string(std::uint32_t(std::rand()) ^
                                              std::uint32_t(::getpid())));
    fs::create_directories(work);

    test_round_trip_and_reports();
    test_inspect();
    test_error_exit_codes();
    test_gen_and_bench();

    std::cout << tests_passed << "/" << tests_run << " checks passed\n";
    fs::remove_all(work);
    return tests_passed == tests_run ? 0 : 1;
}
