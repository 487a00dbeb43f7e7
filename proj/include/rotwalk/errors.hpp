#pragma once

#include <stdexcept>

namespace rotwalk {

// Malformed alpha spec or unparseable input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (lattice support, oracle atom count) was hit.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Output path could not be opened or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rotwalk
