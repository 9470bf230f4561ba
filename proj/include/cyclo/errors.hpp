#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cyclo {

/// Input lies outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
public:
    DivisionByZero() : DomainError("division by zero") {}
    explicit DivisionByZero(const std::string& what) : DomainError(what) {}
};

/// Scaling constant of a monic normalization has no supported cyclotomic form.
class UnsupportedScaling : public DomainError {
public:
    using DomainError::DomainError;
};

/// A configured size ceiling (monomials, conductor) would be exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Interval enclosures could not separate a decision at the precision cap.
class UndecidedAtCap : public std::runtime_error {
public:
    explicit UndecidedAtCap(long cap_bits)
        : std::runtime_error("undecided at precision cap of " + std::to_string(cap_bits) + " bits"),
          cap_bits_(cap_bits)
    {
    }

    long cap_bits() const noexcept { return cap_bits_; }

private:
    long cap_bits_;
};

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string message, std::size_t position, std::vector<std::string> expected)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position),
          expected_(std::move(expected)),
          detail_(std::move(message))
    {
    }

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
    std::string detail_;
};

} // namespace cyclo
