#pragma once

#include <stdexcept>
#include <string>

namespace lmow {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violations (log of a non-unit series, odd leg count, ...).
struct domain_error : error {
    using error::error;
};

// Malformed structural input: bad dart pairings, invalid PD codes, bad JSON shapes.
struct structure_error : error {
    using error::error;
};

// Alexander reconstruction cannot be satisfied within the requested span.
struct span_error : error {
    using error::error;
};

// A truncated invariant is not in the image of the forward map.
struct not_in_image_error : error {
    using error::error;
};

// Violation of an internal invariant; indicates a bug, not bad input.
struct internal_error : error {
    using error::error;
};

} // namespace lmow
