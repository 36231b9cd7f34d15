#pragma once

#include <stdexcept>
#include <string>

namespace anomaly {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wedge or Dolbeault output would exceed bidegree (n, n).
struct DegreeError : Error {
    using Error::Error;
};

// A matrix required to be positive definite is not. Carries the grid point
// (-1 for pointwise calls) and the offending smallest eigenvalue.
struct PositivityError : Error {
    PositivityError(const std::string& what, long point, double eigenvalue)
        : Error(what), point(point), eigenvalue(eigenvalue) {}
    long point = -1;
    double eigenvalue = 0.0;
};

// A form declared real fails the reality check beyond tolerance.
struct RealityError : Error {
    using Error::Error;
};

struct BidegreeMismatch : Error {
    using Error::Error;
};

// Requested derivative order is not resolvable on the current grid.
struct ResolutionError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace anomaly
