#pragma once
// Crack-coding codec: every pixel of the matrix is covered by exactly one
// chain. A chain starts at a stored (row, col, value) and extends greedily
// through 4-connected neighbors of the same value, emitting one direction
// code per pixel entered.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crk/bmp.hpp"

namespace crk {

// Direction codes and their unit steps.
inline constexpr std::uint8_t kDirLeft = 0;  // (row, col-1)
inline constexpr std::uint8_t kDirUp = 1;    // (row-1, col)
inline constexpr std::uint8_t kDirRight = 2; // (row, col+1)
inline constexpr std::uint8_t kDirDown = 3;  // (row+1, col)

struct Chain {
    std::uint32_t row = 0; // start position, 0-based, row 0 = top
    std::uint32_t col = 0;
    PixelValue value = 0;
    std::vector<std::uint8_t> codes;

    bool operator==(const Chain&) const = default;
};

struct ChainSet {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<Chain> chains; // discovery order

    bool operator==(const ChainSet&) const = default;
};

// Per-pixel flags; bits are only ever set during one encode.
class VisitedMask {
public:
    VisitedMask(std::size_t rows, std::size_t cols)
        : cols_(cols), bits_(rows * cols, 0) {}

    bool test(std::size_t row, std::size_t col) const {
        return bits_[row * cols_ + col] != 0;
    }
    void set(std::size_t row, std::size_t col) { bits_[row * cols_ + col] = 1; }

private:
    std::size_t cols_;
    std::vector<std::uint8_t> bits_;
};

// Scans rows top to bottom, columns left to right; opens a chain at each
// pixel not yet visited. Pure function of the matrix.
ChainSet encode(const PixelMatrix& matrix);

// Extends a chain from (row, col): neighbors are tried in fixed priority
// left, up, right, down; the first in-bounds, unvisited neighbor equal to
// value is entered and the search restarts there. (row, col) must already
// be marked visited.
std::vector<std::uint8_t> trace_chain(const PixelMatrix& matrix, VisitedMask& visited,
                                      std::size_t row, std::size_t col, PixelValue value);

// Replays all chains into a fresh matrix, advancing a cursor one step per
// code. Throws walk_out_of_bounds, overlap_write or incomplete_cover on
// corrupt chain sets.
PixelMatrix decode(const ChainSet& chains);

std::uint64_t total_code_count(const ChainSet& chains);

} // namespace crk
