#ifndef WPZERO_ERRORS_HPP
#define WPZERO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wpzero {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative scheme failed to contract within its step budget, or a
/// series truncation bound could not be met.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The invariants describe a collapsed period lattice (discriminant zero,
/// or a modulus at the endpoints k^2 in {0,1} where a period is infinite).
class DegenerateLattice : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation point is too close to a pole for a finite value to be
/// meaningful; callers should treat the function value as infinite.
class PoleProximity : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The closed-form zero expression does not cover these invariants
/// (equianharmonic case g2 = 0).
class UnsupportedInvariant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The polar radius denominator is non-positive at the requested angle:
/// the trajectory is not bound there.
class UnboundOrbit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace wpzero

#endif
