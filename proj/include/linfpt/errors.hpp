#pragma once

#include <stdexcept>
#include <string>

namespace linfpt {

// Raised when the bracket around an oscillating series limit shrinks below
// the floating-point resolution floor without resolving the comparison.
struct UnresolvedComparison : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised by oscillation_ratio when a consecutive partial-sum difference
// underflows to exactly zero.
struct DegenerateDifference : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary a > 0, b = 0: the gamma proposal rate b^2/2 degenerates.
struct UnsupportedBoundary : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Envelope calibration produced a non-finite domination constant.
struct CalibrationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The acceptance-rejection loop exceeded its proposal cap.
struct ProposalExhaustion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Statistics requested on an empty sample.
struct EmptySample : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace linfpt
