#ifndef WPZERO_ORBITS_HPP
#define WPZERO_ORBITS_HPP

#include <vector>

#include "wpzero/jacobi.hpp"

namespace wpzero {
namespace orbits {

/// Parameters of the orbit ODE u'' + u = alpha + 3 beta u^2 plus the
/// modulus shaping the closed-form solution.
struct OrbitParams {
    double alpha;
    double beta; // != 0
    jacobi::Modulus m;
};

/// Constants of the polar orbit equation r = 1/(A + B sn^2(C theta, k)).
struct OrbitConstants {
    double A;
    double B;
    double C;
};

struct TrajectorySample {
    double theta;
    double r; // valid only when bound
    double x;
    double y;
    bool bound;
};

/// Exact constants from the ODE parameters:
///   A = (1/(6 beta)) (1 - sqrt((1-12 alpha beta)/(k^4-k^2+1)) (k^2+1))
///   B = (k^2/(2 beta)) sqrt((1-12 alpha beta)/(k^4-k^2+1))
///   C = (1/2) ((1-12 alpha beta)/(k^4-k^2+1))^(1/4)
/// Requires 1 - 12 alpha beta > 0, beta != 0 and a real modulus in [0,1).
OrbitConstants orbit_constants(const OrbitParams& p);

/// Polar radius at the given angle.  Throws UnboundOrbit when the
/// denominator A + B sn^2 is not positive.
double radius(double theta, const OrbitConstants& oc, const jacobi::Modulus& m);

/// Principal angle in [0, K/C] attaining the given radius:
/// theta = (1/C) arcsn(sqrt((1/r - A)/B)).  Requires B != 0 and the
/// radicand in [0, 1].
double angle_from_radius(double r, const OrbitConstants& oc, const jacobi::Modulus& m);

/// n samples at uniformly spaced angles in [0, theta_max]; angles where
/// the orbit is unbound are flagged rather than fatal.
std::vector<TrajectorySample> sample_trajectory(const OrbitConstants& oc,
                                                const jacobi::Modulus& m,
                                                double theta_max, std::size_t n);

/// Central-difference residual |u'' + u - alpha - 3 beta u^2| of the
/// closed-form solution u = A + B sn^2(C theta), step h in [1e-6, 1e-2].
double ode_residual(const OrbitConstants& oc, const OrbitParams& p,
                    double theta, double h);

} // namespace orbits
} // namespace wpzero

#endif
