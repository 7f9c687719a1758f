#ifndef MAGSPEC_ERRORS_HPP
#define MAGSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace magspec {

// Bad user input: malformed config, parameter outside its admissible range.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A numeric contract failed: near-singular solve, lost positivity, ...
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace magspec

#endif
