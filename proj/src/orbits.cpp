#include "wpzero/orbits.hpp"

#include <algorithm>
#include <cmath>

namespace wpzero {
namespace orbits {

namespace {

void check_params(const OrbitParams& p)
{
    if (p.beta == 0.0) {
        throw DomainError("orbit: beta must be nonzero");
    }
    if (!(1.0 - 12.0 * p.alpha * p.beta > 0.0)) {
        throw DomainError("orbit: requires 1 - 12 alpha beta > 0");
    }
    if (!p.m.guaranteed()) {
        throw DomainError("orbit: modulus must be real in [0,1)");
    }
}

double sn2(double theta, const OrbitConstants& oc, double m)
{
    double sn, cn, dn;
    jacobi::sn_cn_dn_real(oc.C * theta, m, sn, cn, dn);
    return sn * sn;
}

} // namespace

OrbitConstants orbit_constants(const OrbitParams& p)
{
    check_params(p);
    const double k2 = p.m.m();
    const double ratio = (1.0 - 12.0 * p.alpha * p.beta) / (k2 * k2 - k2 + 1.0);
    const double root = std::sqrt(ratio);
    OrbitConstants oc;
    oc.A = (1.0 - root * (k2 + 1.0)) / (6.0 * p.beta);
    oc.B = k2 / (2.0 * p.beta) * root;
    oc.C = 0.5 * std::pow(ratio, 0.25);
    return oc;
}

double radius(double theta, const OrbitConstants& oc, const jacobi::Modulus& m)
{
    if (!m.guaranteed()) {
        throw DomainError("radius: modulus must be real in [0,1)");
    }
    const double den = oc.A + oc.B * sn2(theta, oc, m.m());
    if (!(den > 0.0)) {
        throw UnboundOrbit("radius: A + B sn^2 <= 0, orbit unbound at this angle");
    }
    return 1.0 / den;
}

double angle_from_radius(double r, const OrbitConstants& oc, const jacobi::Modulus& m)
{
    if (!m.guaranteed()) {
        throw DomainError("angle_from_radius: modulus must be real in [0,1)");
    }
    if (oc.B == 0.0) {
        throw DomainError("angle_from_radius: B must be nonzero");
    }
    double w2 = (1.0 / r - oc.A) / oc.B;
    if (w2 < -1e-12 || w2 > 1.0 + 1e-12) {
        throw DomainError("angle_from_radius: radius not attained on the principal arc");
    }
    w2 = std::clamp(w2, 0.0, 1.0);
    const double w = std::sqrt(w2);
    const double k2 = m.m();
    const double u = w * numerics::carlson_rf(1.0 - w2, 1.0 - k2 * w2, 1.0);
    return u / oc.C;
}

std::vector<TrajectorySample> sample_trajectory(const OrbitConstants& oc,
                                                const jacobi::Modulus& m,
                                                double theta_max, std::size_t n)
{
    if (n < 2) {
        throw DomainError("sample_trajectory: need at least two samples");
    }
    if (!(theta_max > 0.0)) {
        throw DomainError("sample_trajectory: theta_max must be positive");
    }
    if (!m.guaranteed()) {
        throw DomainError("sample_trajectory: modulus must be real in [0,1)");
    }

    std::vector<TrajectorySample> out;
    out.reserve(n);
    const double k2 = m.m();
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = theta_max * static_cast<double>(i) / static_cast<double>(n - 1);
        const double den = oc.A + oc.B * sn2(theta, oc, k2);
        TrajectorySample s{theta, 0.0, 0.0, 0.0, false};
        if (den > 0.0) {
            s.r = 1.0 / den;
            s.x = s.r * std::cos(theta);
            s.y = s.r * std::sin(theta);
            s.bound = true;
        }
        out.push_back(s);
    }
    return out;
}

double ode_residual(const OrbitConstants& oc, const OrbitParams& p,
                    double theta, double h)
{
    check_params(p);
    if (!(h >= 1e-6 && h <= 1e-2)) {
        throw DomainError("ode_residual: step must lie in [1e-6, 1e-2]");
    }
    const double k2 = p.m.m();
    const auto u = [&](double th) { return oc.A + oc.B * sn2(th, oc, k2); };
    const double u0 = u(theta);
    const double upp = (u(theta + h) - 2.0 * u0 + u(theta - h)) / (h * h);
    return std::abs(upp + u0 - p.alpha - 3.0 * p.beta * u0 * u0);
}

} // namespace orbits
} // namespace wpzero
