#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace chiralq {

/// Short form of a number for error messages (six significant digits).
inline std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (negative Bessel
/// argument, Im(alpha) < 0, non-vectorial field where a vector is required).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at the spatial origin of a kernel singular there.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Frequency at the pole omega = a of the frequency-domain kernel.
class PoleError : public Error {
public:
    using Error::Error;
};

/// Grid too small for the requested stencil, or mismatched grids.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Field does not have the expected algebraic shape (e.g. scalar part present).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Source violates the continuity equation beyond tolerance.
class ContinuityError : public Error {
public:
    ContinuityError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// Quadrature contour too coarse to resolve the pole region.
class ResolutionError : public Error {
public:
    using Error::Error;
};

/// Truncated series or truncated source support exceeds its tolerance.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, double magnitude)
        : Error(what), magnitude_(magnitude) {}
    double magnitude() const noexcept { return magnitude_; }

private:
    double magnitude_;
};

/// Malformed or invalid run configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace chiralq
