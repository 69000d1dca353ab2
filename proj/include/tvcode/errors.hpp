#pragma once

#include <stdexcept>

namespace tvcode {

// Validation and precondition failures. The CLI maps all of these to exit
// code 2; library callers can catch the specific type.

struct TooSmallAlphabet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPositiveProbability : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotNormalized : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SupportViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct AlphabetTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidBallSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace tvcode
