#include "crk/container.hpp"

#include <cstring>

#include "crk/bitpack.hpp"
#include "crk/error.hpp"

namespace crk {

namespace {

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

std::uint16_t read_u16(const std::uint8_t* p) {
    return static_cast<std::uint16_t>(p[0] | (std::uint16_t(p[1]) << 8));
}

std::uint32_t read_u32(const std::uint8_t* p) {
    return std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
           (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
}

class StreamReader {
public:
    explicit StreamReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::span<const std::uint8_t> take(std::size_t n, const char* what) {
        if (bytes_.size() - pos_ < n)
            fail(ErrorCode::truncated, std::string("stream ends inside ") + what);
        auto out = bytes_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    std::uint8_t u8(const char* what) { return take(1, what)[0]; }
    std::uint16_t u16(const char* what) { return read_u16(take(2, what).data()); }
    std::uint32_t u32(const char* what) { return read_u32(take(4, what).data()); }

    std::size_t position() const noexcept { return pos_; }
    std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

bool stream_depth_ok(std::uint8_t bpp) {
    return bpp == 1 || bpp == 4 || bpp == 8 || bpp == 24;
}

} // namespace

bool looks_like_stream(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= 4 && std::memcmp(bytes.data(), kStreamMagic, 4) == 0;
}

std::vector<std::uint8_t> serialize(const ChainSet& chains, const BmpImage& source) {
    if (chains.cols > 0xFFFF || chains.rows > 0xFFFF)
        fail(ErrorCode::too_large,
             "image dimensions exceed the 16-bit record coordinate range");
    const auto& ih = source.info_header;
    if (chains.rows != std::uint32_t(ih.height) || chains.cols != std::uint32_t(ih.width))
        fail(ErrorCode::bounds_violation,
             "chain set dimensions disagree with the source image");

    const auto blob = write_bmp_headers(source);
    const bool truecolor = ih.bits_per_pixel == 24;

    std::vector<std::uint8_t> out;
    out.insert(out.end(), kStreamMagic, kStreamMagic + 4);
    put_u32(out, chains.cols);
    put_u32(out, chains.rows);
    out.push_back(std::uint8_t(ih.bits_per_pixel));
    put_u32(out, std::uint32_t(blob.size()));
    out.insert(out.end(), blob.begin(), blob.end());
    put_u32(out, std::uint32_t(chains.chains.size()));

    for (const Chain& chain : chains.chains) {
        put_u16(out, std::uint16_t(chain.row));
        put_u16(out, std::uint16_t(chain.col));
        if (truecolor) {
            out.push_back(std::uint8_t(chain.value >> 16)); // R
            out.push_back(std::uint8_t(chain.value >> 8));  // G
            out.push_back(std::uint8_t(chain.value));       // B
        } else {
            out.push_back(std::uint8_t(chain.value));
        }
        put_u32(out, std::uint32_t(chain.codes.size()));
        const PackedCodes packed = pack(chain.codes);
        out.insert(out.end(), packed.byte_data.begin(), packed.byte_data.end());
    }
    return out;
}

CompressedStream deserialize(std::span<const std::uint8_t> bytes) {
    StreamReader reader(bytes);

    const auto magic = reader.take(4, "the magic");
    if (std::memcmp(magic.data(), kStreamMagic, 4) != 0)
        fail(ErrorCode::bad_magic, "stream does not start with \"CRK1\"");

    CompressedStream stream;
    stream.width = reader.u32("the width");
    stream.height = reader.u32("the height");
    const std::uint8_t bpp = reader.u8("the depth");
    if (!stream_depth_ok(bpp))
        fail(ErrorCode::unsupported_depth,
             "stream depth " + std::to_string(bpp) + " is not 1, 4, 8 or 24");
    stream.bits_per_pixel = bpp;
    if (stream.width == 0 || stream.height == 0)
        fail(ErrorCode::bad_header, "zero dimensions");
    if (stream.width > 0xFFFF || stream.height > 0xFFFF)
        fail(ErrorCode::too_large, "stream dimensions exceed the 16-bit record range");

    const std::uint32_t blob_len = reader.u32("the header blob length");
    const auto blob = reader.take(blob_len, "the header blob");
    stream.original_header_blob.assign(blob.begin(), blob.end());

    // The blob must be a BMP prologue agreeing with the stream fields.
    if (blob.size() < 54)
        fail(ErrorCode::bad_header, "embedded header blob shorter than 54 bytes");
    if (blob[0] != 'B' || blob[1] != 'M')
        fail(ErrorCode::bad_header, "embedded header blob is not a BMP header");
    if (read_u32(&blob[10]) != blob.size())
        fail(ErrorCode::bad_header,
             "embedded pixel_data_offset disagrees with the blob length");
    const auto blob_width = static_cast<std::int32_t>(read_u32(&blob[18]));
    const auto blob_height = static_cast<std::int32_t>(read_u32(&blob[22]));
    if (blob_width != std::int32_t(stream.width) ||
        blob_height != std::int32_t(stream.height))
        fail(ErrorCode::bad_header, "stream dimensions disagree with the embedded header");
    if (read_u16(&blob[28]) != stream.bits_per_pixel)
        fail(ErrorCode::bad_header, "stream depth disagrees with the embedded header");

    const std::uint32_t chain_count = reader.u32("the chain count");
    const bool truecolor = bpp == 24;
    const std::uint64_t cell_count =
        std::uint64_t(stream.width) * std::uint64_t(stream.height);

    stream.chains.rows = stream.height;
    stream.chains.cols = stream.width;
    std::uint64_t covered = 0;
    for (std::uint32_t i = 0; i < chain_count; ++i) {
        Chain chain;
        chain.row = reader.u16("a record row");
        chain.col = reader.u16("a record column");
        if (chain.row >= stream.height || chain.col >= stream.width)
            fail(ErrorCode::bounds_violation,
                 "record " + std::to_string(i) + " starts outside the image");
        if (truecolor) {
            const auto rgb = reader.take(3, "a record value");
            chain.value = (PixelValue(rgb[0]) << 16) | (PixelValue(rgb[1]) << 8) | rgb[2];
        } else {
            chain.value = reader.u8("a record value");
        }
        PackedCodes packed;
        packed.code_count = reader.u32("a record code count");
        const auto code_bytes = reader.take(packed_size(packed.code_count), "record codes");
        packed.byte_data.assign(code_bytes.begin(), code_bytes.end());
        chain.codes = unpack(packed);
        covered += std::uint64_t(packed.code_count) + 1;
        stream.chains.chains.push_back(std::move(chain));
    }

    if (reader.remaining() != 0)
        fail(ErrorCode::bad_length, "trailing bytes after the final chain record");
    if (covered != cell_count)
        fail(ErrorCode::coverage_mismatch,
             "records cover " + std::to_string(covered) + " cells of " +
                 std::to_string(cell_count));
    return stream;
}

std::vector<std::uint8_t> restore_file(const CompressedStream& stream) {
    const PixelMatrix matrix = decode(stream.chains);
    std::vector<std::uint8_t> out = stream.original_header_blob;
    const auto array = pack_pixel_array(matrix, stream.bits_per_pixel);
    out.insert(out.end(), array.begin(), array.end());
    return out;
}

std::string dump_text(const ChainSet& chains, std::uint16_t bits_per_pixel) {
    std::string out;
    for (const Chain& chain : chains.chains) {
        out += std::to_string(chain.row);
        out += ' ';
        out += std::to_string(chain.col);
        out += ' ';
        if (bits_per_pixel == 24) {
            out += std::to_string((chain.value >> 16) & 0xFF);
            out += ',';
            out += std::to_string((chain.value >> 8) & 0xFF);
            out += ',';
            out += std::to_string(chain.value & 0xFF);
        } else {
            out += std::to_string(chain.value);
        }
        for (const std::uint8_t code : chain.codes) {
            out += ' ';
            out += char('0' + code);
        }
        out += " -1\n";
    }
    return out;
}

} // namespace crk
