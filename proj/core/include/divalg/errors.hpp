#ifndef DIVALG_ERRORS_HPP
#define DIVALG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divalg {

/// Base class for everything this library throws.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed call: dimension mismatch, mixed owners, uncertified input.
class usage_error : public error {
public:
    using error::error;
};

/// Mathematically invalid input: zero where nonzero is required, a square
/// coordinate where a non-square is required, a non-invertible conjugator.
class domain_error : public error {
public:
    using error::error;
};

/// An operation's stated precondition does not hold for these arguments.
class precondition_error : public error {
public:
    using error::error;
};

/// A constructor-time invariant check failed; the message names the invariant.
class construction_error : public error {
public:
    using error::error;
};

/// Internal consistency violation. Signals a bug, not a data problem.
class internal_error : public error {
public:
    using error::error;
};

} // namespace divalg

#endif
