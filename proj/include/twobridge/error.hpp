#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

enum class ErrorCode {
    TagMismatch,
    EmptyInput,
    ZeroInput,
    InvalidFraction,
    NotSymmetric,
    OddLength,
    NonUnitEntry,
    EmptySequence,
    Range,
    Nonintegral,
    Degenerate,
    BadM0,
    RelationFailed,
    LongitudeMismatch,
    Usage,
};

// machine-readable name, e.g. "TAG_MISMATCH"
const char* code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(code_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace twobridge
