#include "crk/error.hpp"

namespace crk {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::bad_magic: return "BadMagic";
    case ErrorCode::unsupported_compression: return "UnsupportedCompression";
    case ErrorCode::unsupported_depth: return "UnsupportedDepth";
    case ErrorCode::truncated: return "Truncated";
    case ErrorCode::bad_header: return "BadHeader";
    case ErrorCode::invalid_image: return "InvalidImage";
    case ErrorCode::walk_out_of_bounds: return "WalkOutOfBounds";
    case ErrorCode::incomplete_cover: return "IncompleteCover";
    case ErrorCode::overlap_write: return "OverlapWrite";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::bounds_violation: return "BoundsViolation";
    case ErrorCode::coverage_mismatch: return "CoverageMismatch";
    case ErrorCode::bad_length: return "BadLength";
    case ErrorCode::bad_spec: return "BadSpec";
    case ErrorCode::verify_failed: return "VerifyFailed";
    case ErrorCode::io_error: return "IoError";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace crk
