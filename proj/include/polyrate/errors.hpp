#pragma once

#include <stdexcept>
#include <string>

namespace polyrate {

// Invalid arguments or violated preconditions (CLI exit code 1).
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Iteration failed to converge or a residual check failed (CLI exit code 2).
class numerical_error : public std::runtime_error {
public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace polyrate
