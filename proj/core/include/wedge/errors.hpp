#pragma once

#include <stdexcept>
#include <string>

namespace wedge {

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

struct OverflowError : std::range_error {
    explicit OverflowError(const std::string& what) : std::range_error(what) {}
};

struct NoRootError : std::runtime_error {
    explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};

/// Entropy condition rho- < rho+ violated at a shock sample.
struct EntropyError : std::runtime_error {
    explicit EntropyError(const std::string& what) : std::runtime_error(what) {}
};

/// Downstream state is not subsonic.
struct NotSubsonicError : std::runtime_error {
    explicit NotSubsonicError(const std::string& what) : std::runtime_error(what) {}
};

/// Bernoulli enthalpy argument became non-positive (cavitation).
struct VacuumError : std::runtime_error {
    explicit VacuumError(const std::string& what) : std::runtime_error(what) {}
};

/// Solvability constraint of the outer Neumann closure violated.
struct CompatibilityError : std::runtime_error {
    explicit CompatibilityError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureError : std::runtime_error {
    explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

/// A mapped point left the domain of definition of a composed field.
struct CompositionError : std::runtime_error {
    explicit CompositionError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wedge
