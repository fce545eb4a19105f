#ifndef SKETCHMATCH_ERRORS_HPP
#define SKETCHMATCH_ERRORS_HPP

#include <stdexcept>

namespace sketchmatch {

/// Malformed input data (bad PNM stream, unknown manifest version, ...).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Image or canvas dimensions do not match what the operation requires.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation needed at least one black pixel and found none.
struct EmptyForegroundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, unwritable directory, ...).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inconsistent configuration (duplicate label, empty template set, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace sketchmatch

#endif
