#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seriesaudit {

/// Base of every error raised by the library. Each subclass corresponds to one
/// named failure mode of the public operations.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A linear factor (a*n + b) with a + b <= 0, i.e. not positive for every n >= 1.
class NonPositiveFactor : public Error {
public:
    using Error::Error;
};

class ZeroNumerator : public Error {
public:
    using Error::Error;
};

/// Residue sum nonzero or total degree below two.
class DivergentSeries : public Error {
public:
    using Error::Error;
};

class PrecisionCapExceeded : public Error {
public:
    using Error::Error;
};

class NonPositiveArgument : public Error {
public:
    using Error::Error;
};

/// Gauss digamma closed forms are tabulated only for moduli dividing 24.
class UnsupportedModulus : public Error {
public:
    using Error::Error;
};

class UnknownSeriesId : public Error {
public:
    using Error::Error;
};

class OddArgument : public Error {
public:
    using Error::Error;
};

/// Raised by the text front ends. `offset` is a byte offset into the input and
/// `length` the span the message refers to.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset, std::size_t length = 1)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset), length_(length)
    {
    }

    std::size_t offset() const noexcept { return offset_; }
    std::size_t length() const noexcept { return length_; }

private:
    std::size_t offset_;
    std::size_t length_;
};

} // namespace seriesaudit
