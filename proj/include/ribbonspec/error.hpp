#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbonspec {

enum class ErrorKind {
    NotInvolution,
    NotPermutation,
    Disconnected,
    InvalidEuler,
    RejectionBudgetExceeded,
    DegenerateDraw,
    Acyclic,
    TruncationExceeded,
    OverlappingIntervals,
    InsufficientSamples,
    Unsorted,
    NotSeparating,
    SizeGuard,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit path) can branch on it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ribbonspec
