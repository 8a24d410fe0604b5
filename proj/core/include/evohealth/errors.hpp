#pragma once

#include <stdexcept>
#include <string>

namespace evohealth {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A parameter record field lies outside its admissible range.
class RangeError : public Error {
public:
    RangeError(std::string field, const std::string& detail);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// An operation was called outside the domain where its formula is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

// Inconsistent configuration: shock bounds, path length, config file contents.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Fertility never crosses one, so no population threshold exists.
class NoThresholdError : public Error {
public:
    using Error::Error;
};

// The stage-3 first-order condition has no sign change on the scan.
class NoRootError : public Error {
public:
    NoRootError(double max_residual, double argmax);
    double max_residual() const noexcept { return max_residual_; }
    double argmax() const noexcept { return argmax_; }

private:
    double max_residual_;
    double argmax_;
};

// The number of FOC roots changes across a finite-difference step.
class PerturbationError : public Error {
public:
    using Error::Error;
};

}  // namespace evohealth
