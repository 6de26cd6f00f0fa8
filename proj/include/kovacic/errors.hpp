#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kovacic {

/// Base for every error raised by the solver kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// A pole sits at a point that is not rational, so the kernel cannot enumerate it.
class UnsupportedPoles : public Error {
public:
    explicit UnsupportedPoles(const std::string& what) : Error(what) {}
};

class NotAPole : public Error {
public:
    explicit NotAPole(const std::string& what) : Error(what) {}
};

/// Input violates an operation's precondition (wrong pole order, odd order at infinity, ...).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

class SymbolicCoefficients : public Error {
public:
    explicit SymbolicCoefficients(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace kovacic
