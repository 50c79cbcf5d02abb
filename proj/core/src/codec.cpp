#include "crk/codec.hpp"

#include <string>

#include "crk/error.hpp"

namespace crk {

namespace {

// Unit steps indexed by direction code: left, up, right, down.
constexpr std::ptrdiff_t kRowStep[4] = {0, -1, 0, 1};
constexpr std::ptrdiff_t kColStep[4] = {-1, 0, 1, 0};

} // namespace

std::vector<std::uint8_t> trace_chain(const PixelMatrix& matrix, VisitedMask& visited,
                                      std::size_t row, std::size_t col, PixelValue value) {
    const auto rows = static_cast<std::ptrdiff_t>(matrix.rows());
    const auto cols = static_cast<std::ptrdiff_t>(matrix.cols());
    std::vector<std::uint8_t> codes;
    // The greedy extension is tail-recursive in its original formulation;
    // a loop keeps stack depth constant on large uniform regions.
    for (;;) {
        bool moved = false;
        for (std::uint8_t code = 0; code < 4; ++code) {
            const std::ptrdiff_t r = std::ptrdiff_t(row) + kRowStep[code];
            const std::ptrdiff_t c = std::ptrdiff_t(col) + kColStep[code];
            if (r < 0 || c < 0 || r >= rows || c >= cols)
                continue;
            const auto nr = std::size_t(r);
            const auto nc = std::size_t(c);
            if (visited.test(nr, nc) || matrix(nr, nc) != value)
                continue;
            visited.set(nr, nc);
            codes.push_back(code);
            row = nr;
            col = nc;
            moved = true;
            break;
        }
        if (!moved)
            return codes;
    }
}

ChainSet encode(const PixelMatrix& matrix) {
    ChainSet out;
    out.rows = static_cast<std::uint32_t>(matrix.rows());
    out.cols = static_cast<std::uint32_t>(matrix.cols());
    VisitedMask visited(matrix.rows(), matrix.cols());
    for (std::size_t row = 0; row < matrix.rows(); ++row) {
        for (std::size_t col = 0; col < matrix.cols(); ++col) {
            if (visited.test(row, col))
                continue;
            visited.set(row, col);
            Chain chain;
            chain.row = static_cast<std::uint32_t>(row);
            chain.col = static_cast<std::uint32_t>(col);
            chain.value = matrix(row, col);
            chain.codes = trace_chain(matrix, visited, row, col, chain.value);
            out.chains.push_back(std::move(chain));
        }
    }
    return out;
}

PixelMatrix decode(const ChainSet& chains) {
    const std::size_t rows = chains.rows;
    const std::size_t cols = chains.cols;
    PixelMatrix out(rows, cols);
    std::vector<std::uint8_t> written(rows * cols, 0);
    std::size_t covered = 0;

    auto stamp = [&](std::size_t row, std::size_t col, PixelValue value) {
        std::uint8_t& flag = written[row * cols + col];
        if (flag)
            fail(ErrorCode::overlap_write, "cell (" + std::to_string(row) + ", " +
                                               std::to_string(col) + ") written twice");
        flag = 1;
        ++covered;
        out(row, col) = value;
    };

    for (const Chain& chain : chains.chains) {
        std::size_t row = chain.row;
        std::size_t col = chain.col;
        if (row >= rows || col >= cols)
            fail(ErrorCode::walk_out_of_bounds, "chain starts outside the matrix");
        stamp(row, col, chain.value);
        for (const std::uint8_t code : chain.codes) {
            if (code > 3)
                fail(ErrorCode::walk_out_of_bounds,
                     "invalid direction code " + std::to_string(code));
            const std::ptrdiff_t r = std::ptrdiff_t(row) + kRowStep[code];
            const std::ptrdiff_t c = std::ptrdiff_t(col) + kColStep[code];
            if (r < 0 || c < 0 || r >= std::ptrdiff_t(rows) || c >= std::ptrdiff_t(cols))
                fail(ErrorCode::walk_out_of_bounds,
                     "code " + std::to_string(code) + " steps outside the matrix");
            row = std::size_t(r);
            col = std::size_t(c);
            stamp(row, col, chain.value);
        }
    }

    if (covered != rows * cols)
        fail(ErrorCode::incomplete_cover,
             std::to_string(rows * cols - covered) + " cells never written");
    return out;
}

std::uint64_t total_code_count(const ChainSet& chains) {
    std::uint64_t total = 0;
    for (const Chain& chain : chains.chains)
        total += chain.codes.size();
    return total;
}

} // namespace crk
