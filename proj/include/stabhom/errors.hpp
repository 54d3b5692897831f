// Error taxonomy shared across the library: input_error for malformed user data
// (CLI exit code 2), precondition_error for violated operation preconditions
// (CLI exit code 3). Internal invariant breakage uses std::logic_error.

#pragma once

#include <stdexcept>
#include <string>

namespace stabhom {

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace stabhom
