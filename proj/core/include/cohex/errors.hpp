#pragma once

#include <stdexcept>
#include <string>

namespace cohex {

/// Requested accuracy could not be certified (e.g. quadrature order
/// escalation exhausted without the doubling check converging).
class AccuracyError : public std::runtime_error {
public:
    explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Truncation of an infinite level ladder leaked probability into the
/// retained tail beyond the configured guard, even after retries.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Step-size underflow in the adaptive integrator.
class StiffnessError : public std::runtime_error {
public:
    explicit StiffnessError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid scenario configuration; carries the offending field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

} // namespace cohex
