#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gawb {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial / presentation text. `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A resource bound (S-pair budget, nilpotency bound, rejection budget) was hit.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Iterating a derivation did not reach zero within the bound.
class NotNilpotent : public Error {
public:
    NotNilpotent(const std::string& generator, int bound)
        : Error("'" + generator + "' is not annihilated within " + std::to_string(bound) + " iterations"),
          bound_(bound) {}
    int bound() const noexcept { return bound_; }

private:
    int bound_;
};

/// An operation was called on inputs violating its precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace gawb
