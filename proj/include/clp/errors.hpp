#pragma once

#include <stdexcept>
#include <string>

namespace clp {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class NotALeaf : public Error {
public:
    using Error::Error;
};

class EmptyMatchSet : public Error {
public:
    EmptyMatchSet() : Error("codelet selection over an empty match set") {}
};

class ZeroRate : public Error {
public:
    ZeroRate() : Error("rate-distortion function is zero at this operating point") {}
};

// Everything that can go wrong while reading a stream back.
class StreamError : public Error {
public:
    using Error::Error;
};

class CorruptStream : public StreamError {
public:
    using StreamError::StreamError;
};

class BadMagic : public StreamError {
public:
    BadMagic() : StreamError("bad magic: not a CLP1 stream") {}
};

class UnsupportedVersion : public StreamError {
public:
    explicit UnsupportedVersion(unsigned v)
        : StreamError("unsupported stream version " + std::to_string(v)) {}
};

} // namespace clp
