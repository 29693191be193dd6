#pragma once

#include <stdexcept>
#include <string>

namespace lrw {

/// Malformed or inconsistent user input (CLI exit code 2).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& m) : std::runtime_error(m) {}
};

/// Presentation is not multidegree-homogeneous (CLI exit code 3).
struct GradingError : std::runtime_error {
    explicit GradingError(const std::string& m) : std::runtime_error(m) {}
};

/// Violated operation precondition, e.g. a non-cocycle twist (CLI exit code 4).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace lrw
