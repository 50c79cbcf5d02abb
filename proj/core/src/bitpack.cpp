#include "crk/bitpack.hpp"

#include <cassert>
#include <string>

#include "crk/error.hpp"

namespace crk {

PackedCodes pack(std::span<const std::uint8_t> codes) {
    PackedCodes out;
    out.code_count = codes.size();
    out.byte_data.assign(packed_size(codes.size()), 0);
    for (std::size_t i = 0; i < codes.size(); ++i) {
        assert(codes[i] <= 3);
        out.byte_data[i / 4] |= std::uint8_t((codes[i] & 0x03) << (6 - 2 * (i % 4)));
    }
    return out;
}

std::vector<std::uint8_t> unpack(const PackedCodes& packed) {
    if (packed.byte_data.size() != packed_size(packed.code_count))
        fail(ErrorCode::bad_length,
             std::to_string(packed.byte_data.size()) + " bytes cannot hold exactly " +
                 std::to_string(packed.code_count) + " codes");
    std::vector<std::uint8_t> codes(packed.code_count);
    for (std::size_t i = 0; i < packed.code_count; ++i)
        codes[i] = (packed.byte_data[i / 4] >> (6 - 2 * (i % 4))) & 0x03;
    return codes;
}

} // namespace crk
