#ifndef TREEIDEAL_ERRORS_HPP
#define TREEIDEAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treeideal {

// Error taxonomy mirrored by the CLI exit codes: violations map to exit 1,
// argument/capacity/parse problems to exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Thrown when a containment precondition fails in a way that cannot be
// blamed on a single misplaced free position.
struct ContainmentError : ArgumentError {
    using ArgumentError::ArgumentError;
};

} // namespace treeideal

#endif
