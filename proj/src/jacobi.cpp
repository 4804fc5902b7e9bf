#include "wpzero/jacobi.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace wpzero {
namespace jacobi {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPoleRadius = 1e-12;

} // namespace

Modulus::Modulus(Complex k2)
    : k2_(k2),
      kprime2_(Complex(1.0) - k2),
      k_(numerics::principal_sqrt(k2)),
      guaranteed_(k2.imag() == 0.0 && k2.real() >= 0.0 && k2.real() < 1.0)
{
}

double QuarterPeriods::K() const
{
    if (!std::isfinite(K_)) {
        throw DegenerateLattice("quarter period K is infinite at k^2 = 1");
    }
    return K_;
}

double QuarterPeriods::Kprime() const
{
    if (!std::isfinite(Kprime_)) {
        throw DegenerateLattice("quarter period K' is infinite at k^2 = 0");
    }
    return Kprime_;
}

QuarterPeriods complete_k(const Modulus& m)
{
    if (m.k2() == Complex(1.0)) {
        throw DegenerateLattice("complete_k: K is infinite at k^2 = 1");
    }
    if (!m.guaranteed()) {
        throw DomainError("complete_k: modulus must be real in [0,1)");
    }
    const double k2 = m.m();
    const double K = kPi / (2.0 * numerics::agm(1.0, std::sqrt(1.0 - k2)));
    const double Kp = (k2 > 0.0)
                          ? kPi / (2.0 * numerics::agm(1.0, std::sqrt(k2)))
                          : std::numeric_limits<double>::infinity();
    return QuarterPeriods(K, Kp);
}

// Bulirsch's AGM recursion (Numerische Mathematik 7, 1965), as used in
// most of the elliptic-function folklore.  Parameter m = k^2 in [0,1].
void sn_cn_dn_real(double u, double m, double& sn, double& cn, double& dn)
{
    constexpr double CA = 1.0e-8; // accuracy ~CA^2
    if (!(m >= 0.0 && m <= 1.0)) {
        throw DomainError("sn_cn_dn_real: parameter must lie in [0,1]");
    }
    double emc = 1.0 - m;

    if (emc == 0.0) {
        cn = 1.0 / std::cosh(u);
        dn = cn;
        sn = std::tanh(u);
        return;
    }

    double a = 1.0;
    dn = 1.0;
    std::array<double, 14> em{}, en{};
    int l = 13;
    double c = 0.0;
    for (int i = 1; i <= 13; ++i) {
        l = i;
        em[i] = a;
        emc = std::sqrt(emc);
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (std::abs(a - emc) <= CA * a) {
            break;
        }
        emc *= a;
        a = c;
    }

    u *= c;
    sn = std::sin(u);
    cn = std::cos(u);
    if (sn != 0.0) {
        a = cn / sn;
        c *= a;
        for (int ii = l; ii >= 1; --ii) {
            const double b = em[ii];
            a *= c;
            c *= dn;
            dn = (en[ii] + a) / (b + a);
            a = c / b;
        }
        a = 1.0 / std::sqrt(c * c + 1.0);
        sn = (sn >= 0.0) ? a : -a;
        cn = c * sn;
    }
}

JacobiValues sn_cn_dn(Complex u, const Modulus& mod)
{
    if (!mod.guaranteed()) {
        throw DomainError("sn_cn_dn: modulus must be real in [0,1)");
    }
    const double m = mod.m();
    const double x = u.real();
    const double y = u.imag();

    // Poles of sn sit at 2pK + (2q+1) i K'; for m = 0 they retreat to
    // infinity and no check is needed.
    if (m > 0.0) {
        const QuarterPeriods qp = complete_k(mod);
        const double K = qp.K();
        const double Kp = qp.Kprime();
        const double dx = std::abs(x - 2.0 * K * std::round(x / (2.0 * K)));
        const double ym = y - 2.0 * Kp * std::round(y / (2.0 * Kp));
        const double dy = std::abs(Kp - std::abs(ym));
        if (std::hypot(dx, dy) < kPoleRadius) {
            throw PoleProximity("sn_cn_dn: argument within 1e-12 of a pole of sn");
        }
    }

    double s, c, d;
    sn_cn_dn_real(x, m, s, c, d);
    double s1, c1, d1;
    sn_cn_dn_real(y, 1.0 - m, s1, c1, d1);

    // Addition decomposition u = x + iy; the denominator is a sum of
    // squares, so it vanishes only on the pole lattice handled above.
    const double den = c1 * c1 + m * s * s * s1 * s1;
    JacobiValues out;
    out.sn = Complex(s * d1, c * d * s1 * c1) / den;
    out.cn = Complex(c * c1, -s * d * s1 * d1) / den;
    out.dn = Complex(d * c1 * d1, -m * s * c * s1) / den;
    return out;
}

Complex inverse_sn(Complex w, const Modulus& mod)
{
    const Complex w2 = w * w;
    Complex u = w * numerics::carlson_rf(Complex(1.0) - w2,
                                         Complex(1.0) - mod.k2() * w2, Complex(1.0));
    if (!mod.guaranteed()) {
        return u; // best effort: no period box to fold into
    }

    const QuarterPeriods qp = complete_k(mod);
    const double K = qp.K();
    double re = u.real();
    double im = u.imag();

    if (mod.m() > 0.0) {
        const double Kp = qp.Kprime();
        im -= 2.0 * Kp * std::floor(im / (2.0 * Kp) + 0.5);
        if (im == -Kp) {
            im = Kp; // keep the strip half-open at the top
        }
    }
    re -= 4.0 * K * std::floor(re / (4.0 * K) + 0.5);
    if (re > K) {
        // sn(2K - u) = sn(u)
        re = 2.0 * K - re;
        im = -im;
    } else if (re < -K) {
        re = -2.0 * K - re;
        im = -im;
    }
    return Complex(re, im);
}

} // namespace jacobi
} // namespace wpzero
