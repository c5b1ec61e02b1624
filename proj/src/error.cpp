#include "ribbonspec/error.hpp"

namespace ribbonspec {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotPermutation: return "NotPermutation";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidEuler: return "InvalidEuler";
    case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorKind::DegenerateDraw: return "DegenerateDraw";
    case ErrorKind::Acyclic: return "Acyclic";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::OverlappingIntervals: return "OverlappingIntervals";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::Unsorted: return "Unsorted";
    case ErrorKind::NotSeparating: return "NotSeparating";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace ribbonspec
