#pragma once

#include <stdexcept>
#include <string>

namespace fisherwit {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: wrong dimensions, out-of-range parameters, malformed scenarios.
class ValidationError : public Error {
public:
    using Error::Error;
};

// The numbers went wrong: truncation loss too large, negative spectrum, ...
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace fisherwit
