#pragma once

#include <stdexcept>

namespace sabban {

// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vector with (near-)zero norm where a direction was required, or a
// unit-norm admission failure.
struct DegenerateVector : Error {
    using Error::Error;
};

// Latitude-circle radius outside (0, 1).
struct InvalidRadius : Error {
    using Error::Error;
};

// Cumulative arc length failed to increase strictly (vanishing speed).
struct NonMonotoneArcLength : Error {
    using Error::Error;
};

// Tangent norm defect above tolerance; frame formulas assume unit speed.
struct NotUnitSpeed : Error {
    using Error::Error;
};

// A finite-difference stencil would leave the curve domain.
struct DomainEdge : Error {
    using Error::Error;
};

// Inversion target outside the table range.
struct OutOfRange : Error {
    using Error::Error;
};

// Invalid run configuration (CLI surface).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace sabban
