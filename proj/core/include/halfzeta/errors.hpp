#pragma once

#include <stdexcept>
#include <string>

namespace halfzeta {

/// Malformed or out-of-domain input (bad curve file, non-square q, composite p).
/// The CLI maps this to exit status 2.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition of an operation was violated by an otherwise well-formed value.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Point counts do not assemble into a zeta function satisfying the Weil constraints.
class certification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exact identity that must hold did not.
class identity_violation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Enumeration would exceed the configured bound.
class bound_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace halfzeta
