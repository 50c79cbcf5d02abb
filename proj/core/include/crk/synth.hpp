#pragma once
// Seeded synthetic test images. Identical specs (seed included) always
// produce identical file bytes.

#include <cstdint>
#include <string>
#include <vector>

#include "crk/bmp.hpp"

namespace crk {

enum class GeneratorKind {
    uniform, // one value everywhere
    stripes, // horizontal bands, adjacent bands differ
    blobs,   // random rectangles over a background
    checker, // two values, alternating per pixel
    noise,   // independent random value per pixel
};

const char* kind_name(GeneratorKind kind);
GeneratorKind kind_from_name(const std::string& name); // bad_spec on unknown

struct SyntheticSpec {
    std::string name; // optional; default_name(spec) when empty
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::uint16_t depth = 8; // 8 or 24
    std::uint32_t region_count = 1;
    GeneratorKind kind = GeneratorKind::uniform;
    std::uint64_t seed = 0;
};

std::string default_name(const SyntheticSpec& spec);

// Throws bad_spec on zero dimensions, depth outside {8,24} or
// region_count == 0. 8-bit images carry a palette of exactly the distinct
// colors used (grey quadruples), with pixel values remapped to indices.
BmpImage generate_synthetic(const SyntheticSpec& spec);

// JSON array of objects with keys width, height, kind and optional name,
// depth, region_count, seed. Throws bad_spec on malformed input.
std::vector<SyntheticSpec> parse_spec_file(const std::string& json_text);

} // namespace crk
