#pragma once

#include <stdexcept>
#include <string>

namespace dgeo {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Point outside the chart domain, or too close to its edge for the
// finite-difference stencil in use.
class DomainError : public Error {
public:
    using Error::Error;
};

// Foot-point solve did not converge: the query point is outside the
// focal region of the surface (or the Newton iteration broke down).
class FocalError : public Error {
public:
    using Error::Error;
};

// Degenerate input: parallel plane vectors, vanishing level-set gradient,
// non-transverse walls.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Tube lift undefined: at theta = 0 a vector with a normal component has
// no horizontal lift tangent to the tube.
class SingularLiftError : public Error {
public:
    using Error::Error;
};

// Eigen-decomposition or Newton breakdown inside a numeric kernel.
class NumericError : public Error {
public:
    using Error::Error;
};

// Least-squares fit is ill-posed (fewer than two distinct abscissae).
class FitError : public Error {
public:
    using Error::Error;
};

// Malformed or semantically invalid configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace dgeo
