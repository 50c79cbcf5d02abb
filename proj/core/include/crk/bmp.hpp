#pragma once
// Reader/writer for uncompressed Windows BMP files (1, 4, 8 and 24 bits
// per pixel, BITMAPINFOHEADER only). Scanlines are stored bottom-up on
// disk and exposed as a top-down pixel matrix here.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace crk {

// Pixel value as the codec sees it: a palette index for indexed images,
// or red<<16 | green<<8 | blue for 24-bit images. Equality is bitwise.
using PixelValue = std::uint32_t;

struct BmpFileHeader {
    std::uint16_t file_type = 0x4D42; // "BM"
    std::uint32_t file_size = 0;
    std::uint16_t reserved1 = 0;
    std::uint16_t reserved2 = 0;
    std::uint32_t pixel_data_offset = 0;

    bool operator==(const BmpFileHeader&) const = default;
};

struct BmpInfoHeader {
    std::uint32_t header_size = 40;
    std::int32_t width = 0;
    std::int32_t height = 0;
    std::uint16_t planes = 1;
    std::uint16_t bits_per_pixel = 0;
    std::uint32_t compression = 0;
    std::uint32_t image_data_size = 0;
    std::int32_t x_pixels_per_meter = 0;
    std::int32_t y_pixels_per_meter = 0;
    std::uint32_t colors_used = 0;
    std::uint32_t colors_important = 0;

    bool operator==(const BmpInfoHeader&) const = default;
};

struct PaletteEntry {
    std::uint8_t blue = 0;
    std::uint8_t green = 0;
    std::uint8_t red = 0;
    std::uint8_t reserved = 0;

    bool operator==(const PaletteEntry&) const = default;
};

// Row 0 is the visually top row.
class PixelMatrix {
public:
    PixelMatrix() = default;
    PixelMatrix(std::size_t rows, std::size_t cols, PixelValue fill = 0)
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept { return cells_.size(); }

    PixelValue operator()(std::size_t row, std::size_t col) const {
        return cells_[row * cols_ + col];
    }
    PixelValue& operator()(std::size_t row, std::size_t col) {
        return cells_[row * cols_ + col];
    }

    bool operator==(const PixelMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<PixelValue> cells_;
};

struct BmpImage {
    BmpFileHeader file_header;
    BmpInfoHeader info_header;
    std::vector<PaletteEntry> palette; // empty for 24-bit images
    std::vector<std::uint8_t> trailing_gap; // bytes between palette end and pixel_data_offset
    PixelMatrix matrix;

    bool operator==(const BmpImage&) const = default;
};

// Parses a complete in-memory BMP file. Throws Error with code bad_magic,
// unsupported_compression, unsupported_depth, truncated, bad_header or
// invalid_image (out-of-range palette index).
BmpImage parse_bmp(std::span<const std::uint8_t> bytes);

// Emits the file byte-for-byte: headers, palette, gap, then bottom-up
// zero-padded scanlines. image_data_size is always written as the true
// pixel array byte count. Throws invalid_image when an invariant fails.
std::vector<std::uint8_t> write_bmp(const BmpImage& image);

const PixelMatrix& matrix_of(const BmpImage& image);

// Everything before the pixel array: file header, info header, palette, gap.
std::vector<std::uint8_t> write_bmp_headers(const BmpImage& image);

// Bottom-up scanlines, zero-padded to the 4-byte stride.
std::vector<std::uint8_t> pack_pixel_array(const PixelMatrix& matrix,
                                           std::uint16_t bits_per_pixel);

// Bytes per stored scanline: ceil(width * bits_per_pixel / 32) * 4.
std::size_t scanline_stride(std::uint32_t width, std::uint16_t bits_per_pixel);

// Assembles a well-formed image around a matrix; header sizes, offsets and
// colors_used are derived. Palette must be empty for 24-bit depth.
BmpImage make_bmp(PixelMatrix matrix, std::uint16_t bits_per_pixel,
                  std::vector<PaletteEntry> palette);

} // namespace crk
