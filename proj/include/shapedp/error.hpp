#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shapedp {

enum class ErrorCode {
    InvalidArgument,
    EmptyMask,
    DegenerateRegion,
    ZeroExtent,
    DimensionMismatch,
    DegenerateCorrespondence,
    OutsideCircle,
    ZeroChord,
    InconsistentMatrix,
    FingerprintMismatch,
    DuplicateId,
    EmptyIndex,
    UnlabeledRecord,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace shapedp
