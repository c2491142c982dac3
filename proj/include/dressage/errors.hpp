#pragma once

#include <stdexcept>
#include <string>

namespace dressage {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

class DirectionError : public Error {
public:
    using Error::Error;
};

class LatticeMismatchError : public Error {
public:
    using Error::Error;
};

class NonNeutralSourceError : public Error {
public:
    using Error::Error;
};

class CouplingMismatchError : public Error {
public:
    using Error::Error;
};

class EmptyPathError : public Error {
public:
    using Error::Error;
};

class ConstraintViolationError : public Error {
public:
    ConstraintViolationError(const std::string& msg, double residual)
        : Error(msg), residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

class SiteError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    NormalizationError(const std::string& msg, double deficit)
        : Error(msg), deficit_(deficit) {}

    /// Measured |a|^2 + |b|^2 - 1.
    double deficit() const { return deficit_; }

private:
    double deficit_ = 0.0;
};

class SiteCollisionError : public Error {
public:
    using Error::Error;
};

class DivergenceMismatchError : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class BinError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace dressage
