#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral {

// File could not be opened / read / written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed content in an input file; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line_no)
        : std::runtime_error(msg), line(line_no) {}
    std::size_t line = 0;
};

// Structurally valid file whose content violates a format requirement
// (non-uniform time axis, too few rows, ...).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested analysis needs a finer frequency grid than the spectrum has.
struct InsufficientResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace spectral
