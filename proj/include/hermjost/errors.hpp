#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermjost {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the supported window of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class PrecisionLoss : public Error {
public:
    PrecisionLoss(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class NonpositiveWeight : public Error {
public:
    NonpositiveWeight(std::size_t index, double value);
    std::size_t index() const { return index_; }
    double value() const { return value_; }

private:
    std::size_t index_;
    double value_;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

// Parse/validation failure. line is 1-based, 0 when not tied to a line.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::size_t line = 0, std::string field = {})
        : Error(what), line_(line), field_(std::move(field)) {}
    std::size_t line() const { return line_; }
    const std::string& field() const { return field_; }

private:
    std::size_t line_;
    std::string field_;
};

}  // namespace hermjost
