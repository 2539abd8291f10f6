// SPDX-License-Identifier: Apache-2.0
#ifndef CTXLOGIC_ERROR_HPP
#define CTXLOGIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctxlogic {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated a precondition (zero ray, atom index out of range, ...).
class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

/// Two objects of different dimensions were combined.
class DimensionMismatchError : public InvalidInputError {
public:
    DimensionMismatchError(int lhs, int rhs)
        : InvalidInputError("dimension mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}
};

/// Structured input (rayset file, decomposition, model) failed validation.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Text could not be parsed; `offset` is the byte position of the failure.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A named context, ray or atom does not exist.
class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& msg) : Error(msg) {}
};

/// Exact arithmetic left the 64-bit range. The computation is aborted rather
/// than silently rounded; inputs at desk scale stay far below this limit.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

} // namespace ctxlogic

#endif
