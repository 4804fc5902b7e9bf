#include "wpzero/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wpzero {
namespace numerics {

namespace {

// Collapse a signed-zero imaginary part so that values on the negative
// real axis always sit on the upper side of the branch cut.
inline Complex upper_cut(Complex z)
{
    if (z.imag() == 0.0) {
        return Complex(z.real(), 0.0);
    }
    return z;
}

constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace

Complex principal_sqrt(Complex z)
{
    return std::sqrt(upper_cut(z));
}

Complex principal_cbrt(Complex z)
{
    return principal_nth_root(z, 3);
}

Complex principal_nth_root(Complex z, int n)
{
    const double r = std::abs(z);
    if (r == 0.0) {
        return Complex(0.0, 0.0);
    }
    const double th = std::arg(upper_cut(z)); // in (-pi, pi]
    return std::polar(std::pow(r, 1.0 / n), th / n);
}

CubicRoots solve_depressed_cubic(Complex p, Complex q)
{
    const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
    const Complex omega2 = std::conj(omega);

    const double scale = std::max({1.0, std::abs(p), std::abs(q)});
    if (std::abs(p) == 0.0 && std::abs(q) == 0.0) {
        return {Complex(0.0), Complex(0.0), Complex(0.0)};
    }

    const Complex disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    const double disc_scale =
        std::max(std::pow(std::abs(p) / 3.0, 3.0), std::pow(std::abs(q) / 2.0, 2.0));

    const bool real_coeffs = (p.imag() == 0.0 && q.imag() == 0.0);
    if (real_coeffs && p.real() < 0.0 && std::abs(disc) < 1e-14 * disc_scale) {
        // Near the discriminant-zero boundary the Cardano radicals
        // cancel; the trigonometric form stays stable and keeps the
        // rho-ordering: root_j = 2 sqrt(-p/3) cos(phi/3 + 2 pi j/3).
        const double mp3 = -p.real() / 3.0;
        const double amp = 2.0 * std::sqrt(mp3);
        const double phi = std::atan2(std::sqrt(std::max(0.0, -disc.real())), -q.real() / 2.0);
        CubicRoots out;
        out.r1 = Complex(amp * std::cos(phi / 3.0), 0.0);
        out.r2 = Complex(amp * std::cos(phi / 3.0 + 2.0 * kPi / 3.0), 0.0);
        out.r3 = Complex(amp * std::cos(phi / 3.0 + 4.0 * kPi / 3.0), 0.0);
        return out;
    }

    const Complex s = principal_sqrt(disc);
    const Complex radicand_plus = -q / 2.0 + s;
    const Complex radicand_minus = -q / 2.0 - s;

    const Complex u = principal_cbrt(radicand_plus);
    Complex v;
    if (std::abs(u) > 1e-150 * scale) {
        // The second radical's branch is tied to the first by the
        // Cardano constraint u v = -p/3; for real cubics with three
        // real roots this coincides with the principal branch.
        v = -p / (3.0 * u);
    } else {
        v = principal_cbrt(radicand_minus);
    }

    CubicRoots out;
    out.r1 = u + v;
    out.r2 = omega * u + omega2 * v;
    out.r3 = omega2 * u + omega * v;
    return out;
}

Complex carlson_rf(Complex x, Complex y, Complex z)
{
    x = upper_cut(x);
    y = upper_cut(y);
    z = upper_cut(z);

    int zeros = (std::abs(x) == 0.0) + (std::abs(y) == 0.0) + (std::abs(z) == 0.0);
    if (zeros > 1) {
        throw DomainError("carlson_rf: at most one argument may be zero");
    }

    // max(|X|,|Y|,|Z|) < tol gives a truncation error ~tol^6 in the
    // fifth-order tail, comfortably below 1e-13 relative.
    const double tol = 2.5e-3;
    Complex mu, X, Y, Z;
    bool contracted = false;
    for (int k = 0; k < 100; ++k) {
        mu = (x + y + z) / 3.0;
        const double scale = std::max({std::abs(x), std::abs(y), std::abs(z)});
        // The mean can vanish exactly (x+y+z = 0 arises for the zero
        // formula's arguments); duplicate first, test later.
        if (std::abs(mu) > 1e-8 * scale) {
            X = 1.0 - x / mu;
            Y = 1.0 - y / mu;
            Z = 1.0 - z / mu;
            if (std::max({std::abs(X), std::abs(Y), std::abs(Z)}) < tol) {
                contracted = true;
                break;
            }
        }
        const Complex sx = principal_sqrt(x);
        const Complex sy = principal_sqrt(y);
        const Complex sz = principal_sqrt(z);
        const Complex lambda = sx * sy + sy * sz + sz * sx;
        x = (x + lambda) * 0.25;
        y = (y + lambda) * 0.25;
        z = (z + lambda) * 0.25;
    }
    if (!contracted) {
        throw NonConvergence("carlson_rf: duplication failed to contract in 100 steps");
    }

    const Complex e2 = X * Y - Z * Z;
    const Complex e3 = X * Y * Z;
    return (1.0 + e2 * (e2 / 24.0 - e3 * (3.0 / 44.0) - 0.1) + e3 / 14.0) / principal_sqrt(mu);
}

double carlson_rf(double x, double y, double z)
{
    if (x < 0.0 || y < 0.0 || z < 0.0) {
        throw DomainError("carlson_rf: real path requires non-negative arguments");
    }
    return carlson_rf(Complex(x), Complex(y), Complex(z)).real();
}

double agm(double a, double b)
{
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("agm: arguments must be positive");
    }
    for (int i = 0; i < 60; ++i) {
        if (std::abs(a - b) <= 4.0 * std::numeric_limits<double>::epsilon() * a) {
            break;
        }
        const double an = 0.5 * (a + b);
        const double gn = std::sqrt(a * b);
        a = an;
        b = gn;
    }
    return 0.5 * (a + b);
}

} // namespace numerics
} // namespace wpzero
