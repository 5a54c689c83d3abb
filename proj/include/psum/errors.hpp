#pragma once

#include <stdexcept>
#include <string>

namespace psum {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_input_error : error {
    using error::error;
};

struct range_too_small_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

struct invariant_error : error {
    using error::error;
};

struct budget_exceeded_error : error {
    using error::error;
};

struct monotonicity_error : error {
    using error::error;
};

struct convexity_error : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

}  // namespace psum
