#pragma once
// Error types shared by all modules.

#include <stdexcept>
#include <string>

namespace zb {

// A precondition on an operation's arguments was not met.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// A request would require sieving beyond the configured capacity.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Arguments are valid numbers but outside the regime an operation supports.
struct regime_error : std::runtime_error {
    explicit regime_error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation at a removable-by-hypothesis singularity (e.g. a = 1).
struct singularity_error : std::domain_error {
    explicit singularity_error(const std::string& what) : std::domain_error(what) {}
};

} // namespace zb
