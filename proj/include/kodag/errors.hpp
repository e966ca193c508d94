#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "kodag/bigint.hpp"

namespace kodag {

/// Malformed user input: sequence specs, CLI arguments, document payloads.
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its stated domain (k > n, labels out of
/// range, join condition violated, ...). CLI exit code 3.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured cap. Carries the exact count
/// that was projected before enumeration started. CLI exit code 5.
class CapError : public std::runtime_error {
public:
    CapError(const std::string& msg, BigInt projected)
        : std::runtime_error(msg), projected_(std::move(projected)) {}

    const BigInt& projected() const { return projected_; }

private:
    BigInt projected_;
};

} // namespace kodag
