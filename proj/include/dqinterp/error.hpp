#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dqinterp {

enum class ErrorKind {
    NotUnit,
    ZeroRealPart,
    InvalidAxis,
    InvalidMatrix,
    DegenerateBlend,
    BetaOutOfRange,
    InvalidCount,
    ParseError,
    InvalidFile,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NotUnit: return "NotUnit";
        case ErrorKind::ZeroRealPart: return "ZeroRealPart";
        case ErrorKind::InvalidAxis: return "InvalidAxis";
        case ErrorKind::InvalidMatrix: return "InvalidMatrix";
        case ErrorKind::DegenerateBlend: return "DegenerateBlend";
        case ErrorKind::BetaOutOfRange: return "BetaOutOfRange";
        case ErrorKind::InvalidCount: return "InvalidCount";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InvalidFile: return "InvalidFile";
    }
    return "Unknown";
}

/// Thrown by every checked operation in the library. `kind()` identifies the
/// failed contract; `what()` carries a one-line human readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace dqinterp
