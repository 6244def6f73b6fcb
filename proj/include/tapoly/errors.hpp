#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tapoly {

// Base of all library errors. Exit-code mapping in the CLI:
// ParseError -> 2, InvalidRepresentation -> 3, TapUndefined -> 4,
// HypothesisFailure -> 5, anything else -> 1.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (word grammar, presentation file, representation file).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Generator images that fail to define a representation (relator not killed,
// missing image, singular matrix).
struct InvalidRepresentation : Error {
    using Error::Error;
};

// The twisted Alexander polynomial is not defined for the request
// (no valid column, deficiency != 1, explicit column with zero denominator).
struct TapUndefined : Error {
    using Error::Error;
};

// A theorem hypothesis fails on the given data (block vanishing at t = 1,
// evaluation at a pole, non-acyclic complex).
struct HypothesisFailure : Error {
    using Error::Error;
};

}  // namespace tapoly
