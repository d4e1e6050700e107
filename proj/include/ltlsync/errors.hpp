#pragma once

#include <stdexcept>
#include <string>

namespace ltlsync {

/// Malformed or inconsistent user input (files, names, formulas, flags).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search or construction exceeded its configured state cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A witness failed its independent re-check. Always an internal bug.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ltlsync
