#pragma once
// Direction codes packed four to a byte, two bits each. The first code
// occupies the top bit-pair (bits 7-6); trailing slack in the last byte
// is zero. This layout is normative for the container format.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace crk {

struct PackedCodes {
    std::vector<std::uint8_t> byte_data;
    std::size_t code_count = 0;

    bool operator==(const PackedCodes&) const = default;
};

// ceil(code_count / 4)
constexpr std::size_t packed_size(std::size_t code_count) {
    return (code_count + 3) / 4;
}

// Every code must be in {0,1,2,3}.
PackedCodes pack(std::span<const std::uint8_t> codes);

// Inverse of pack. Throws bad_length when byte_data is not exactly
// ceil(code_count / 4) bytes long.
std::vector<std::uint8_t> unpack(const PackedCodes& packed);

} // namespace crk
