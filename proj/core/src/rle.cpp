#include "crk/rle.hpp"

#include <string>

#include "crk/error.hpp"

namespace crk {

std::vector<std::uint8_t> rle_baseline_encode(const PixelMatrix& matrix,
                                              std::uint16_t bits_per_pixel) {
    if (bits_per_pixel != 8)
        fail(ErrorCode::unsupported_depth, "RLE baseline handles 8-bit images only");
    std::vector<std::uint8_t> out;
    for (std::size_t row = 0; row < matrix.rows(); ++row) {
        std::size_t col = 0;
        while (col < matrix.cols()) {
            const PixelValue value = matrix(row, col);
            if (value > 0xFF)
                fail(ErrorCode::invalid_image, "pixel value does not fit one byte");
            std::size_t run = 1;
            while (col + run < matrix.cols() && run < 255 &&
                   matrix(row, col + run) == value)
                ++run;
            out.push_back(std::uint8_t(run));
            out.push_back(std::uint8_t(value));
            col += run;
        }
    }
    return out;
}

PixelMatrix rle_baseline_decode(std::span<const std::uint8_t> bytes,
                                std::size_t rows, std::size_t cols) {
    PixelMatrix out(rows, cols);
    std::size_t pos = 0;
    for (std::size_t row = 0; row < rows; ++row) {
        std::size_t col = 0;
        while (col < cols) {
            if (bytes.size() - pos < 2)
                fail(ErrorCode::truncated, "RLE data ends inside a run");
            const std::size_t run = bytes[pos];
            const std::uint8_t value = bytes[pos + 1];
            pos += 2;
            if (run == 0)
                fail(ErrorCode::bad_length, "zero-length run");
            if (run > cols - col)
                fail(ErrorCode::bad_length, "run crosses a row boundary");
            for (std::size_t k = 0; k < run; ++k)
                out(row, col + k) = value;
            col += run;
        }
    }
    if (pos != bytes.size())
        fail(ErrorCode::bad_length, "trailing bytes after the final run");
    return out;
}

} // namespace crk
