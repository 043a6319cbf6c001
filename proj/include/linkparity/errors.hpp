#pragma once

#include <stdexcept>
#include <string>

namespace linkparity {

// Base class for every error the library reports.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed token or component in a Gauss-code string.
struct SyntaxError : Error {
    using Error::Error;
};

// A label is not used exactly once as O and once as U, or the two
// occurrences of a label carry different signs.
struct LabelError : Error {
    using Error::Error;
};

// Component index, position, chord label or colouring out of range.
struct IndexError : Error {
    using Error::Error;
};

// The diagram has a degenerate component, so no 2-colouring exists.
struct NotTwoColourable : Error {
    using Error::Error;
};

// Operation defined only for 1-component diagrams.
struct NotAKnot : Error {
    using Error::Error;
};

// The IP parity requires even pairwise linking numbers.
struct OddLinkingNumbers : Error {
    using Error::Error;
};

// A move site was applied to a diagram other than the one it was
// enumerated for.
struct StaleSite : Error {
    using Error::Error;
};

}  // namespace linkparity
