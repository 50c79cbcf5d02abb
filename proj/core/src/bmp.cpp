#include "crk/bmp.hpp"

#include <string>

#include "crk/error.hpp"

namespace crk {

namespace {

constexpr std::size_t kFileHeaderSize = 14;
constexpr std::size_t kInfoHeaderSize = 40;
constexpr std::size_t kHeadersSize = kFileHeaderSize + kInfoHeaderSize;
constexpr std::uint16_t kBmpMagic = 0x4D42; // 19778, "BM"

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (std::uint16_t(p[1]) << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
           (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}

std::int32_t read_i32(const std::uint8_t* p) {
    return static_cast<std::int32_t>(read_u32(p));
}

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(std::uint8_t(v));
    out.push_back(std::uint8_t(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(std::uint8_t(v));
    out.push_back(std::uint8_t(v >> 8));
    out.push_back(std::uint8_t(v >> 16));
    out.push_back(std::uint8_t(v >> 24));
}

void put_i32(std::vector<std::uint8_t>& out, std::int32_t v) {
    put_u32(out, static_cast<std::uint32_t>(v));
}

bool depth_ok(std::uint16_t bpp) {
    return bpp == 1 || bpp == 4 || bpp == 8 || bpp == 24;
}

// Full-image invariant check shared by the writers.
void validate(const BmpImage& image) {
    const auto& fh = image.file_header;
    const auto& ih = image.info_header;
    if (fh.file_type != kBmpMagic)
        fail(ErrorCode::invalid_image, "file_type is not \"BM\"");
    if (fh.reserved1 != 0 || fh.reserved2 != 0)
        fail(ErrorCode::invalid_image, "reserved fields must be zero");
    if (ih.header_size != kInfoHeaderSize)
        fail(ErrorCode::invalid_image, "header_size must be 40");
    if (ih.planes != 1)
        fail(ErrorCode::invalid_image, "planes must be 1");
    if (ih.compression != 0)
        fail(ErrorCode::invalid_image, "compression must be 0");
    if (!depth_ok(ih.bits_per_pixel))
        fail(ErrorCode::invalid_image, "bits_per_pixel must be 1, 4, 8 or 24");
    if (ih.width <= 0 || ih.height <= 0)
        fail(ErrorCode::invalid_image, "dimensions must be positive");

    const auto width = static_cast<std::uint32_t>(ih.width);
    const auto height = static_cast<std::uint32_t>(ih.height);
    if (image.matrix.rows() != height || image.matrix.cols() != width)
        fail(ErrorCode::invalid_image, "matrix dimensions disagree with the info header");

    if (ih.bits_per_pixel == 24) {
        if (!image.palette.empty())
            fail(ErrorCode::invalid_image, "24-bit images carry no color table");
    } else {
        const std::size_t full = std::size_t(1) << ih.bits_per_pixel;
        if (image.palette.empty() || image.palette.size() > full)
            fail(ErrorCode::invalid_image, "palette size out of range for depth");
        const bool consistent = (ih.colors_used == 0 && image.palette.size() == full) ||
                                ih.colors_used == image.palette.size();
        if (!consistent)
            fail(ErrorCode::invalid_image, "colors_used disagrees with the palette size");
    }

    const std::size_t expected_offset =
        kHeadersSize + image.palette.size() * 4 + image.trailing_gap.size();
    if (fh.pixel_data_offset != expected_offset)
        fail(ErrorCode::invalid_image,
             "pixel_data_offset disagrees with headers, palette and gap");

    const PixelValue limit = ih.bits_per_pixel == 24
                                 ? 0x1000000
                                 : static_cast<PixelValue>(image.palette.size());
    for (std::size_t r = 0; r < height; ++r)
        for (std::size_t c = 0; c < width; ++c)
            if (image.matrix(r, c) >= limit)
                fail(ErrorCode::invalid_image,
                     "pixel value out of range at row " + std::to_string(r) +
                         ", col " + std::to_string(c));
}

void append_headers(std::vector<std::uint8_t>& out, const BmpImage& image) {
    const auto& fh = image.file_header;
    const auto& ih = image.info_header;
    put_u16(out, fh.file_type);
    put_u32(out, fh.file_size);
    put_u16(out, fh.reserved1);
    put_u16(out, fh.reserved2);
    put_u32(out, fh.pixel_data_offset);

    const std::size_t stride = scanline_stride(std::uint32_t(ih.width), ih.bits_per_pixel);
    put_u32(out, ih.header_size);
    put_i32(out, ih.width);
    put_i32(out, ih.height);
    put_u16(out, ih.planes);
    put_u16(out, ih.bits_per_pixel);
    put_u32(out, ih.compression);
    put_u32(out, std::uint32_t(stride * std::uint32_t(ih.height)));
    put_i32(out, ih.x_pixels_per_meter);
    put_i32(out, ih.y_pixels_per_meter);
    put_u32(out, ih.colors_used);
    put_u32(out, ih.colors_important);

    for (const PaletteEntry& e : image.palette) {
        out.push_back(e.blue);
        out.push_back(e.green);
        out.push_back(e.red);
        out.push_back(e.reserved);
    }
    out.insert(out.end(), image.trailing_gap.begin(), image.trailing_gap.end());
}

} // namespace

std::size_t scanline_stride(std::uint32_t width, std::uint16_t bits_per_pixel) {
    return (std::size_t(width) * bits_per_pixel + 31) / 32 * 4;
}

BmpImage parse_bmp(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2)
        fail(ErrorCode::truncated, "file too short for the \"BM\" signature");
    if (bytes[0] != 'B' || bytes[1] != 'M')
        fail(ErrorCode::bad_magic, "first two bytes are not \"BM\"");
    if (bytes.size() < kHeadersSize)
        fail(ErrorCode::truncated, "file shorter than the 54-byte headers");

    BmpImage image;
    auto& fh = image.file_header;
    auto& ih = image.info_header;
    fh.file_type = read_u16(&bytes[0]);
    fh.file_size = read_u32(&bytes[2]);
    fh.reserved1 = read_u16(&bytes[6]);
    fh.reserved2 = read_u16(&bytes[8]);
    fh.pixel_data_offset = read_u32(&bytes[10]);
    ih.header_size = read_u32(&bytes[14]);
    ih.width = read_i32(&bytes[18]);
    ih.height = read_i32(&bytes[22]);
    ih.planes = read_u16(&bytes[26]);
    ih.bits_per_pixel = read_u16(&bytes[28]);
    ih.compression = read_u32(&bytes[30]);
    ih.image_data_size = read_u32(&bytes[34]);
    ih.x_pixels_per_meter = read_i32(&bytes[38]);
    ih.y_pixels_per_meter = read_i32(&bytes[42]);
    ih.colors_used = read_u32(&bytes[46]);
    ih.colors_important = read_u32(&bytes[50]);

    if (ih.header_size != kInfoHeaderSize)
        fail(ErrorCode::bad_header,
             "info header size " + std::to_string(ih.header_size) + ", expected 40");
    if (ih.planes != 1)
        fail(ErrorCode::bad_header, "planes " + std::to_string(ih.planes) + ", expected 1");
    if (ih.width <= 0 || ih.height <= 0)
        fail(ErrorCode::bad_header, "nonpositive dimensions");
    if (fh.reserved1 != 0 || fh.reserved2 != 0)
        fail(ErrorCode::bad_header, "reserved fields must be zero");
    if (ih.compression != 0)
        fail(ErrorCode::unsupported_compression,
             "compression " + std::to_string(ih.compression) + ", only 0 accepted");
    if (!depth_ok(ih.bits_per_pixel))
        fail(ErrorCode::unsupported_depth,
             std::to_string(ih.bits_per_pixel) + " bits per pixel");

    const auto width = static_cast<std::uint32_t>(ih.width);
    const auto height = static_cast<std::uint32_t>(ih.height);

    std::size_t palette_len = 0;
    if (ih.bits_per_pixel != 24) {
        const std::size_t full = std::size_t(1) << ih.bits_per_pixel;
        palette_len = ih.colors_used == 0 ? full : ih.colors_used;
        if (palette_len > full)
            fail(ErrorCode::bad_header, "colors_used exceeds 2^bits_per_pixel");
    }

    const std::size_t palette_end = kHeadersSize + palette_len * 4;
    if (fh.pixel_data_offset < palette_end)
        fail(ErrorCode::bad_header, "pixel_data_offset overlaps headers or palette");
    if (fh.pixel_data_offset > bytes.size())
        fail(ErrorCode::truncated, "pixel_data_offset beyond end of file");

    image.palette.reserve(palette_len);
    for (std::size_t i = 0; i < palette_len; ++i) {
        const std::uint8_t* p = &bytes[kHeadersSize + i * 4];
        image.palette.push_back(PaletteEntry{p[0], p[1], p[2], p[3]});
    }
    image.trailing_gap.assign(bytes.begin() + palette_end,
                              bytes.begin() + fh.pixel_data_offset);

    const std::size_t stride = scanline_stride(width, ih.bits_per_pixel);
    if (stride * height > bytes.size() - fh.pixel_data_offset)
        fail(ErrorCode::truncated, "pixel array extends past end of file");

    image.matrix = PixelMatrix(height, width);
    const std::uint8_t* array = bytes.data() + fh.pixel_data_offset;
    for (std::size_t row = 0; row < height; ++row) {
        // Scanlines are stored bottom-up.
        const std::uint8_t* line = array + (height - 1 - row) * stride;
        for (std::size_t col = 0; col < width; ++col) {
            PixelValue v = 0;
            switch (ih.bits_per_pixel) {
            case 24:
                v = (PixelValue(line[col * 3 + 2]) << 16) |
                    (PixelValue(line[col * 3 + 1]) << 8) | line[col * 3];
                break;
            case 8:
                v = line[col];
                break;
            case 4:
                v = (line[col / 2] >> (col % 2 == 0 ? 4 : 0)) & 0x0F;
                break;
            case 1:
                v = (line[col / 8] >> (7 - col % 8)) & 0x01;
                break;
            }
            if (ih.bits_per_pixel != 24 && v >= palette_len)
                fail(ErrorCode::invalid_image,
                     "palette index " + std::to_string(v) + " out of range at row " +
                         std::to_string(row) + ", col " + std::to_string(col));
            image.matrix(row, col) = v;
        }
    }
    return image;
}

std::vector<std::uint8_t> pack_pixel_array(const PixelMatrix& matrix,
                                           std::uint16_t bits_per_pixel) {
    if (!depth_ok(bits_per_pixel))
        fail(ErrorCode::invalid_image, "bits_per_pixel must be 1, 4, 8 or 24");
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();
    const std::size_t stride = scanline_stride(std::uint32_t(cols), bits_per_pixel);
    const PixelValue limit =
        bits_per_pixel == 24 ? 0x1000000 : PixelValue(1) << bits_per_pixel;

    std::vector<std::uint8_t> out(stride * rows, 0);
    for (std::size_t row = 0; row < rows; ++row) {
        std::uint8_t* line = out.data() + (rows - 1 - row) * stride;
        for (std::size_t col = 0; col < cols; ++col) {
            const PixelValue v = matrix(row, col);
            if (v >= limit)
                fail(ErrorCode::invalid_image, "pixel value does not fit the depth");
            switch (bits_per_pixel) {
            case 24:
                line[col * 3] = std::uint8_t(v);
                line[col * 3 + 1] = std::uint8_t(v >> 8);
                line[col * 3 + 2] = std::uint8_t(v >> 16);
                break;
            case 8:
                line[col] = std::uint8_t(v);
                break;
            case 4:
                line[col / 2] |= std::uint8_t(v << (col % 2 == 0 ? 4 : 0));
                break;
            case 1:
                line[col / 8] |= std::uint8_t(v << (7 - col % 8));
                break;
            }
        }
    }
    return out;
}

std::vector<std::uint8_t> write_bmp_headers(const BmpImage& image) {
    validate(image);
    std::vector<std::uint8_t> out;
    out.reserve(image.file_header.pixel_data_offset);
    append_headers(out, image);
    return out;
}

std::vector<std::uint8_t> write_bmp(const BmpImage& image) {
    validate(image);
    const auto& ih = image.info_header;
    const std::size_t stride =
        scanline_stride(std::uint32_t(ih.width), ih.bits_per_pixel);
    std::vector<std::uint8_t> out;
    out.reserve(image.file_header.pixel_data_offset +
                stride * std::size_t(ih.height));
    append_headers(out, image);
    const auto array = pack_pixel_array(image.matrix, ih.bits_per_pixel);
    out.insert(out.end(), array.begin(), array.end());
    return out;
}

const PixelMatrix& matrix_of(const BmpImage& image) {
    return image.matrix;
}

BmpImage make_bmp(PixelMatrix matrix, std::uint16_t bits_per_pixel,
                  std::vector<PaletteEntry> palette) {
    BmpImage image;
    auto& fh = image.file_header;
    auto& ih = image.info_header;
    ih.width = static_cast<std::int32_t>(matrix.cols());
    ih.height = static_cast<std::int32_t>(matrix.rows());
    ih.bits_per_pixel = bits_per_pixel;
    if (bits_per_pixel != 24) {
        const std::size_t full = std::size_t(1) << bits_per_pixel;
        ih.colors_used =
            palette.size() == full ? 0 : std::uint32_t(palette.size());
    }
    const std::size_t stride =
        scanline_stride(std::uint32_t(matrix.cols()), bits_per_pixel);
    ih.image_data_size = std::uint32_t(stride * matrix.rows());
    fh.pixel_data_offset = std::uint32_t(kHeadersSize + palette.size() * 4);
    fh.file_size = fh.pixel_data_offset + ih.image_data_size;
    image.palette = std::move(palette);
    image.matrix = std::move(matrix);
    validate(image);
    return image;
}

} // namespace crk
