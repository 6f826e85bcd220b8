#pragma once

#include <stdexcept>

namespace bws {

// Invalid run configuration: unknown algorithm or distribution name,
// malformed size ladder, unsupported width.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A timed sort produced output that failed the sortedness check.
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bws
