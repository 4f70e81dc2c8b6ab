#include "twobridge/error.hpp"

namespace twobridge {

const char* code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::TagMismatch: return "TAG_MISMATCH";
    case ErrorCode::EmptyInput: return "EMPTY_INPUT";
    case ErrorCode::ZeroInput: return "ZERO_INPUT";
    case ErrorCode::InvalidFraction: return "INVALID_FRACTION";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::OddLength: return "ODD_LENGTH";
    case ErrorCode::NonUnitEntry: return "NON_UNIT_ENTRY";
    case ErrorCode::EmptySequence: return "EMPTY_SEQUENCE";
    case ErrorCode::Range: return "RANGE";
    case ErrorCode::Nonintegral: return "NONINTEGRAL";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::BadM0: return "BAD_M0";
    case ErrorCode::RelationFailed: return "RELATION_FAILED";
    case ErrorCode::LongitudeMismatch: return "LONGITUDE_MISMATCH";
    case ErrorCode::Usage: return "USAGE";
    }
    return "UNKNOWN";
}

}  // namespace twobridge
