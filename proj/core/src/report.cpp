#include "crk/report.hpp"

#include <algorithm>

namespace crk {

double compression_percentage(std::uint64_t original_size, std::uint64_t compressed_size) {
    if (original_size == 0)
        return 0.0;
    return (1.0 - double(compressed_size) / double(original_size)) * 100.0;
}

std::uint64_t count_differing_bytes(std::span<const std::uint8_t> a,
                                    std::span<const std::uint8_t> b) {
    const std::size_t common = std::min(a.size(), b.size());
    std::uint64_t differed = std::max(a.size(), b.size()) - common;
    for (std::size_t i = 0; i < common; ++i)
        if (a[i] != b[i])
            ++differed;
    return differed;
}

} // namespace crk
