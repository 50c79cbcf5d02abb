#include "crk/synth.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

#include "crk/error.hpp"

namespace crk {

namespace {

// Raw engine draws keep the output identical across standard libraries;
// std::uniform_int_distribution is not portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint32_t below(std::uint32_t n) { return std::uint32_t(engine_() % n); }

    PixelValue color(std::uint16_t depth) {
        return depth == 24 ? PixelValue(engine_() & 0xFFFFFF)
                           : PixelValue(engine_() & 0xFF);
    }

    PixelValue color_not(std::uint16_t depth, PixelValue avoid) {
        PixelValue v;
        do {
            v = color(depth);
        } while (v == avoid);
        return v;
    }

private:
    std::mt19937_64 engine_;
};

void validate_spec(const SyntheticSpec& spec) {
    if (spec.width == 0 || spec.height == 0)
        fail(ErrorCode::bad_spec, "dimensions must be positive");
    if (spec.depth != 8 && spec.depth != 24)
        fail(ErrorCode::bad_spec, "depth must be 8 or 24");
    if (spec.region_count == 0)
        fail(ErrorCode::bad_spec, "region_count must be positive");
}

PixelMatrix generate_matrix(const SyntheticSpec& spec) {
    Rng rng(spec.seed);
    const std::size_t h = spec.height;
    const std::size_t w = spec.width;
    PixelMatrix m(h, w);

    switch (spec.kind) {
    case GeneratorKind::uniform: {
        const PixelValue v = rng.color(spec.depth);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j)
                m(i, j) = v;
        break;
    }
    case GeneratorKind::stripes: {
        std::vector<PixelValue> bands(spec.region_count);
        bands[0] = rng.color(spec.depth);
        for (std::size_t b = 1; b < bands.size(); ++b)
            bands[b] = rng.color_not(spec.depth, bands[b - 1]);
        for (std::size_t i = 0; i < h; ++i) {
            const std::size_t band = i * spec.region_count / h;
            for (std::size_t j = 0; j < w; ++j)
                m(i, j) = bands[band];
        }
        break;
    }
    case GeneratorKind::blobs: {
        const PixelValue background = rng.color(spec.depth);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j)
                m(i, j) = background;
        for (std::uint32_t r = 0; r < spec.region_count; ++r) {
            const PixelValue v = rng.color_not(spec.depth, background);
            const std::size_t y0 = rng.below(spec.height);
            const std::size_t x0 = rng.below(spec.width);
            const std::size_t bh = 1 + rng.below(std::max(1u, spec.height / 3));
            const std::size_t bw = 1 + rng.below(std::max(1u, spec.width / 3));
            for (std::size_t i = y0; i < std::min(h, y0 + bh); ++i)
                for (std::size_t j = x0; j < std::min(w, x0 + bw); ++j)
                    m(i, j) = v;
        }
        break;
    }
    case GeneratorKind::checker: {
        const PixelValue a = rng.color(spec.depth);
        const PixelValue b = rng.color_not(spec.depth, a);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j)
                m(i, j) = (i + j) % 2 == 0 ? a : b;
        break;
    }
    case GeneratorKind::noise: {
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j)
                m(i, j) = rng.color(spec.depth);
        break;
    }
    }
    return m;
}

} // namespace

const char* kind_name(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::uniform: return "uniform";
    case GeneratorKind::stripes: return "stripes";
    case GeneratorKind::blobs: return "blobs";
    case GeneratorKind::checker: return "checker";
    case GeneratorKind::noise: return "noise";
    }
    return "unknown";
}

GeneratorKind kind_from_name(const std::string& name) {
    if (name == "uniform") return GeneratorKind::uniform;
    if (name == "stripes") return GeneratorKind::stripes;
    if (name == "blobs") return GeneratorKind::blobs;
    if (name == "checker") return GeneratorKind::checker;
    if (name == "noise") return GeneratorKind::noise;
    fail(ErrorCode::bad_spec, "unknown generator kind \"" + name + "\"");
}

std::string default_name(const SyntheticSpec& spec) {
    return std::string(kind_name(spec.kind)) + "_" + std::to_string(spec.width) + "x" +
           std::to_string(spec.height) + "_d" + std::to_string(spec.depth) + "_r" +
           std::to_string(spec.region_count) + "_s" + std::to_string(spec.seed);
}

BmpImage generate_synthetic(const SyntheticSpec& spec) {
    validate_spec(spec);
    PixelMatrix raw = generate_matrix(spec);

    if (spec.depth == 24)
        return make_bmp(std::move(raw), 24, {});

    // 8-bit: palette of exactly the distinct colors used, ascending, with
    // cells remapped to palette indices.
    bool present[256] = {};
    for (std::size_t i = 0; i < raw.rows(); ++i)
        for (std::size_t j = 0; j < raw.cols(); ++j)
            present[raw(i, j)] = true;
    std::uint8_t index_of[256] = {};
    std::vector<PaletteEntry> palette;
    for (int v = 0; v < 256; ++v) {
        if (!present[v])
            continue;
        index_of[v] = std::uint8_t(palette.size());
        const auto grey = std::uint8_t(v);
        palette.push_back(PaletteEntry{grey, grey, grey, 0});
    }
    for (std::size_t i = 0; i < raw.rows(); ++i)
        for (std::size_t j = 0; j < raw.cols(); ++j)
            raw(i, j) = index_of[raw(i, j)];
    return make_bmp(std::move(raw), 8, std::move(palette));
}

std::vector<SyntheticSpec> parse_spec_file(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::bad_spec, std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!doc.is_array())
        fail(ErrorCode::bad_spec, "spec file must be a JSON array of objects");

    std::vector<SyntheticSpec> specs;
    try {
        for (const auto& item : doc) {
            if (!item.is_object())
                fail(ErrorCode::bad_spec, "spec entries must be JSON objects");
            SyntheticSpec spec;
            spec.width = item.at("width").get<std::uint32_t>();
            spec.height = item.at("height").get<std::uint32_t>();
            spec.kind = kind_from_name(item.at("kind").get<std::string>());
            spec.depth = item.value("depth", std::uint16_t(8));
            spec.region_count = item.value("region_count", std::uint32_t(1));
            spec.seed = item.value("seed", std::uint64_t(0));
            spec.name = item.value("name", std::string());
            if (spec.name.empty())
                spec.name = default_name(spec);
            validate_spec(spec);
            specs.push_back(std::move(spec));
        }
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::bad_spec, std::string("bad spec entry: ") + e.what());
    }
    return specs;
}

} // namespace crk
