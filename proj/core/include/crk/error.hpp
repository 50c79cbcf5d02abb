#pragma once

#include <stdexcept>
#include <string>

namespace crk {

// Error classes double as CLI exit codes; keep the values stable.
enum class ErrorCode : int {
    bad_magic = 2,
    unsupported_compression = 3,
    unsupported_depth = 4,
    truncated = 5,
    bad_header = 6,
    invalid_image = 7,
    walk_out_of_bounds = 8,
    incomplete_cover = 9,
    overlap_write = 10,
    too_large = 11,
    bounds_violation = 12,
    coverage_mismatch = 13,
    bad_length = 14,
    bad_spec = 15,
    verify_failed = 16,
    io_error = 17,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace crk
