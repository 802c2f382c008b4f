#pragma once

#include <stdexcept>
#include <string>

namespace cmlabel {

/// Input violates a documented precondition or data invariant.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search was refused because its size guard was exceeded.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal post-verification failed. Either the caller broke a
/// precondition that is too expensive to check up front, or there is a bug.
class VerificationFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace cmlabel
