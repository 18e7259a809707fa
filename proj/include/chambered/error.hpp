#pragma once

#include <stdexcept>
#include <string>

namespace chambered {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph files, words, covectors, flags.
class InputError : public Error {
public:
    using Error::Error;
};

// Dynkin input, or an affine-only operation on a non-affine system.
class NotAffineError : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

// Covector of level zero: lies in no closed chamber.
class CriticalHyperplane : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Minimal presentation changed between truncation N and N+2.
class InstabilityError : public Error {
public:
    using Error::Error;
};

} // namespace chambered
