#pragma once

#include <stdexcept>

namespace singlet {

// A build would exceed the configured amplitude budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coupling step cannot be performed (missing source state, invalid path).
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace singlet
