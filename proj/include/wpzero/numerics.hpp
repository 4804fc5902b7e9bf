#ifndef WPZERO_NUMERICS_HPP
#define WPZERO_NUMERICS_HPP

#include <complex>

#include "wpzero/errors.hpp"

namespace wpzero {

/// Universal scalar of the library: double-precision complex.
using Complex = std::complex<double>;

namespace numerics {

/// Principal complex square root with the branch fixed so that
/// arg(sqrt(z)) lies in (-pi/2, pi/2].  Differs from std::sqrt only in
/// that a negative-zero imaginary part is collapsed to +0 first, which
/// keeps values on the negative real axis on the upper side of the cut.
Complex principal_sqrt(Complex z);

/// Principal complex cube root, arg in (-pi/3, pi/3].
Complex principal_cbrt(Complex z);

/// Principal n-th root, arg in (-pi/n, pi/n].
Complex principal_nth_root(Complex z, int n);

/// Roots of the depressed cubic t^3 + p t + q = 0.
///
/// r1 is the root built from rho = 1 and principal radicals in the
/// Cardano expression; r2 and r3 follow with rho = exp(2 pi i/3) and
/// its square.  The three roots sum to zero up to rounding.
struct CubicRoots {
    Complex r1;
    Complex r2;
    Complex r3;
};

/// Cardano's method with deterministic branch selection.  Near the
/// discriminant-zero boundary of a real cubic the radicals cancel
/// catastrophically; that region is rerouted to the trigonometric
/// three-real-root form, keeping the same rho-ordering of the roots.
CubicRoots solve_depressed_cubic(Complex p, Complex q);

/// Carlson symmetric elliptic integral R_F(x,y,z) by the duplication
/// iteration, relative accuracy ~1e-13.  Fully symmetric in x, y, z.
/// At most one argument may be zero; arguments on the negative real
/// axis are evaluated on the principal branch (upper side of the cut).
///
/// Throws NonConvergence if the iteration has not contracted after 100
/// duplication steps.
Complex carlson_rf(Complex x, Complex y, Complex z);

/// Real fast path of R_F; requires x, y, z >= 0 with at most one zero.
double carlson_rf(double x, double y, double z);

/// Arithmetic-geometric mean of a, b > 0, relative accuracy ~1e-15.
double agm(double a, double b);

} // namespace numerics
} // namespace wpzero

#endif
