#pragma once
// Golden BMP files assembled byte by byte, independently of the library's
// writer. All fixtures are "clean": zero scanline padding, true
// image_data_size, correct file_size.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace testsupport {

struct Rgb {
    std::uint8_t red = 0, green = 0, blue = 0;
};

namespace detail {

inline void le16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v & 0xFF));
    out.push_back(std::uint8_t((v >> 8) & 0xFF));
}

inline void le32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v & 0xFF));
    out.push_back(std::uint8_t((v >> 8) & 0xFF));
    out.push_back(std::uint8_t((v >> 16) & 0xFF));
    out.push_back(std::uint8_t((v >> 24) & 0xFF));
}

// Independent stride expression: round the byte count up to 4.
inline std::size_t row_bytes(std::uint32_t width, std::uint16_t bpp) {
    const std::size_t data = (std::size_t(width) * bpp + 7) / 8;
    return (data + 3) & ~std::size_t(3);
}

} // namespace detail

// pixel(row, col) returns a palette index; row 0 is the top row.
// palette_size 0 means the full 2^bpp table with colors_used = 0.
inline std::vector<std::uint8_t> build_indexed_bmp(
    std::uint16_t bpp, std::uint32_t width, std::uint32_t height,
    const std::function<std::uint8_t(std::uint32_t, std::uint32_t)>& pixel,
    std::uint32_t palette_size = 0, std::uint32_t gap_bytes = 0) {
    const std::uint32_t full = 1u << bpp;
    const std::uint32_t colors = palette_size == 0 ? full : palette_size;
    const std::uint32_t colors_used = palette_size; // 0 means "full table"
    const std::size_t stride = detail::row_bytes(width, bpp);
    const std::uint32_t offset = 14 + 40 + colors * 4 + gap_bytes;
    const std::uint32_t array_size = std::uint32_t(stride * height);

    std::vector<std::uint8_t> out;
    out.push_back('B');
    out.push_back('M');
    detail::le32(out, offset + array_size); // bfSize
    detail::le16(out, 0);
    detail::le16(out, 0);
    detail::le32(out, offset); // bfOffBits
    detail::le32(out, 40);
    detail::le32(out, width);
    detail::le32(out, height);
    detail::le16(out, 1);
    detail::le16(out, bpp);
    detail::le32(out, 0); // biCompression
    detail::le32(out, array_size);
    detail::le32(out, 0);
    detail::le32(out, 0);
    detail::le32(out, colors_used);
    detail::le32(out, 0);
    for (std::uint32_t i = 0; i < colors; ++i) {
        const auto grey = std::uint8_t(i * 7 + 3);
        out.push_back(grey);                  // blue
        out.push_back(std::uint8_t(grey ^ 0x55)); // green
        out.push_back(std::uint8_t(255 - grey)); // red
        out.push_back(0);
    }
    for (std::uint32_t i = 0; i < gap_bytes; ++i)
        out.push_back(std::uint8_t(0xA0 + i));

    // Bottom-up scanlines.
    for (std::uint32_t line = 0; line < height; ++line) {
        const std::uint32_t row = height - 1 - line;
        std::vector<std::uint8_t> scan(stride, 0);
        for (std::uint32_t col = 0; col < width; ++col) {
            const std::uint8_t v = pixel(row, col);
            if (bpp == 8)
                scan[col] = v;
            else if (bpp == 4)
                scan[col / 2] |= std::uint8_t((v & 0x0F) << (col % 2 == 0 ? 4 : 0));
            else
                scan[col / 8] |= std::uint8_t((v & 0x01) << (7 - col % 8));
        }
        out.insert(out.end(), scan.begin(), scan.end());
    }
    return out;
}

inline std::vector<std::uint8_t> build_truecolor_bmp(
    std::uint32_t width, std::uint32_t height,
    const std::function<Rgb(std::uint32_t, std::uint32_t)>& pixel) {
    const std::size_t stride = detail::row_bytes(width, 24);
    const std::uint32_t offset = 14 + 40;
    const std::uint32_t array_size = std::uint32_t(stride * height);

    std::vector<std::uint8_t> out;
    out.push_back('B');
    out.push_back('M');
    detail::le32(out, offset + array_size);
    detail::le16(out, 0);
    detail::le16(out, 0);
    detail::le32(out, offset);
    detail::le32(out, 40);
    detail::le32(out, width);
    detail::le32(out, height);
    detail::le16(out, 1);
    detail::le16(out, 24);
    detail::le32(out, 0);
    detail::le32(out, array_size);
    detail::le32(out, 0);
    detail::le32(out, 0);
    detail::le32(out, 0);
    detail::le32(out, 0);

    for (std::uint32_t line = 0; line < height; ++line) {
        const std::uint32_t row = height - 1 - line;
        std::vector<std::uint8_t> scan(stride, 0);
        for (std::uint32_t col = 0; col < width; ++col) {
            const Rgb v = pixel(row, col);
            scan[col * 3] = v.blue;
            scan[col * 3 + 1] = v.green;
            scan[col * 3 + 2] = v.red;
        }
        out.insert(out.end(), scan.begin(), scan.end());
    }
    return out;
}

struct Fixture {
    std::string name;
    std::vector<std::uint8_t> bytes;
};

// Every depth in {1,4,8,24} and every padding residue 0..3 per depth.
inline std::vector<Fixture> golden_fixtures() {
    std::vector<Fixture> fixtures;

    auto idx = [](std::uint32_t limit) {
        return [limit](std::uint32_t r, std::uint32_t c) {
            return std::uint8_t((r * 7 + c * 3 + 1) % limit);
        };
    };
    auto rgb = [](std::uint32_t r, std::uint32_t c) {
        return Rgb{std::uint8_t(c * 41 + 5), std::uint8_t(r * 59 + 9),
                   std::uint8_t((r + c) * 23 + 1)};
    };

    // 8-bit: widths 1..4 hit padding 3,2,1,0.
    for (std::uint32_t w : {1u, 2u, 3u, 4u})
        fixtures.push_back({"bmp8_w" + std::to_string(w),
                            build_indexed_bmp(8, w, 3, idx(256))});
    // Minimal 1x1 with the full 1078-byte prologue.
    fixtures.push_back({"bmp8_1x1",
                        build_indexed_bmp(8, 1, 1, [](std::uint32_t, std::uint32_t) {
                            return std::uint8_t(7);
                        })});
    // Shrunk color table and a slack gap before the pixel array.
    fixtures.push_back({"bmp8_small_palette", build_indexed_bmp(8, 5, 4, idx(10), 10)});
    fixtures.push_back({"bmp8_gap", build_indexed_bmp(8, 4, 2, idx(16), 16, 8)});

    // 4-bit: widths 2,4,6,8 hit padding 3,2,1,0.
    for (std::uint32_t w : {2u, 4u, 6u, 8u})
        fixtures.push_back({"bmp4_w" + std::to_string(w),
                            build_indexed_bmp(4, w, 3, idx(16))});
    fixtures.push_back({"bmp4_small_palette", build_indexed_bmp(4, 7, 2, idx(5), 5)});

    // 1-bit: widths 8,16,24,32 hit padding 3,2,1,0.
    for (std::uint32_t w : {8u, 16u, 24u, 32u})
        fixtures.push_back({"bmp1_w" + std::to_string(w),
                            build_indexed_bmp(1, w, 2, idx(2))});
    fixtures.push_back({"bmp1_w3", build_indexed_bmp(1, 3, 3, idx(2))});

    // 24-bit: widths 1..4 hit padding 1,2,3,0.
    for (std::uint32_t w : {1u, 2u, 3u, 4u})
        fixtures.push_back({"bmp24_w" + std::to_string(w), build_truecolor_bmp(w, 3, rgb)});

    return fixtures;
}

} // namespace testsupport
