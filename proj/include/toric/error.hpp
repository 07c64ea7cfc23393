#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched vector/matrix dimensions.
struct dimension_error : error {
    using error::error;
};

// Degenerate geometric input (zero vector, lower-dimensional hull, ...).
struct degeneracy_error : error {
    using error::error;
};

// A construction hypothesis does not hold for the given input.
struct hypothesis_error : error {
    using error::error;
};

// Malformed user input (files, polynomials, command arguments).
struct input_error : error {
    using error::error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

} // namespace toric
