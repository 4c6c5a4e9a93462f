#pragma once

#include <stdexcept>
#include <string>

namespace bnspecht {

/// Input that violates an operation's precondition (size mismatch, malformed text, ...).
class RejectedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested an orbit representative for a bipartition whose orbit set is empty.
class EmptyOrbitSet : public RejectedInput {
public:
    using RejectedInput::RejectedInput;
};

/// A configured cap (basis size, term count, group size) was hit before completion.
class ResourceExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bnspecht
