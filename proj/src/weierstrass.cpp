#include "wpzero/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace wpzero {
namespace weierstrass {

namespace numx = wpzero::numerics;

namespace {

// A candidate k^2 counts as "real in [0,1]" when its imaginary part is
// rounding dust from the complex cubic.
inline bool real_in_unit_interval(Complex k2)
{
    return std::abs(k2.imag()) <= 1e-10 * (1.0 + std::abs(k2)) &&
           k2.real() >= -1e-12 && k2.real() <= 1.0 + 1e-12;
}

inline Complex snap_real(Complex z, double rel = 1e-12)
{
    if (std::abs(z.imag()) <= rel * (1.0 + std::abs(z))) {
        return Complex(z.real(), 0.0);
    }
    return z;
}

void check_nondegenerate(const Invariants& inv)
{
    if (inv.degenerate()) {
        throw DegenerateLattice("invariants have vanishing discriminant");
    }
}

} // namespace

Complex Invariants::discriminant() const
{
    const Complex g2c = g2_ * g2_ * g2_;
    return g2c - 27.0 * g3_ * g3_;
}

Complex Invariants::absolute_invariant() const
{
    if (std::abs(g3_) == 0.0) {
        throw DomainError("absolute invariant is infinite for g3 = 0");
    }
    const Complex g2c = g2_ * g2_ * g2_;
    return g2c / (27.0 * g3_ * g3_);
}

Complex Invariants::xi_cubic_coefficient() const
{
    const Complex g2c = g2_ * g2_ * g2_;
    const Complex den = 27.0 * g3_ * g3_ - g2c;
    if (std::abs(den) == 0.0) {
        throw DegenerateLattice("xi cubic coefficient undefined at zero discriminant");
    }
    return (27.0 / 4.0) * g2c / den;
}

bool Invariants::degenerate() const
{
    const double scale = std::max({std::pow(std::abs(g2_), 3.0),
                                   27.0 * std::pow(std::abs(g3_), 2.0), 0.0});
    return std::abs(discriminant()) <= 1e-14 * scale;
}

Invariants invariants_from_modulus(const jacobi::Modulus& m, Complex C)
{
    if (std::abs(C) == 0.0) {
        throw DomainError("invariants_from_modulus: C must be nonzero");
    }
    const Complex k2 = m.k2();
    const Complex C2 = C * C;
    const Complex C4 = C2 * C2;
    const Complex g2 = (4.0 / 3.0) * (k2 * k2 - k2 + 1.0) * C4;
    const Complex g3 =
        (4.0 / 27.0) * (k2 + 1.0) * (k2 - 2.0) * (2.0 * k2 - 1.0) * C4 * C2;
    return Invariants(g2, g3);
}

Invariants invariants_from_orbit(double alpha, double beta, const jacobi::Modulus& m)
{
    if (beta == 0.0) {
        throw DomainError("invariants_from_orbit: beta must be nonzero");
    }
    const double s = 1.0 - 12.0 * alpha * beta;
    if (!(s > 0.0)) {
        throw DomainError("invariants_from_orbit: requires 1 - 12 alpha beta > 0");
    }
    const Complex k2 = m.k2();
    const Complex ratio = s / (k2 * k2 - k2 + 1.0);
    const Complex g2(1.0 / 12.0 - alpha * beta);
    const Complex g3 = (k2 + 1.0) * (k2 - 2.0) * (2.0 * k2 - 1.0) / (16.0 * 27.0) *
                       std::pow(ratio, Complex(1.5));
    return Invariants(g2, g3);
}

ModulusRecovery recover_modulus(const Invariants& inv)
{
    check_nondegenerate(inv);

    ModulusRecovery rec;
    rec.a = inv.xi_cubic_coefficient();
    rec.xi_candidates = numx::solve_depressed_cubic(rec.a, -rec.a);

    const std::array<Complex, 3> xis = {rec.xi_candidates.r1, rec.xi_candidates.r2,
                                        rec.xi_candidates.r3};
    for (std::size_t i = 0; i < 3; ++i) {
        const Complex xi = xis[i];
        const Complex rad = numx::principal_sqrt(xi * xi + 2.0 * xi - 3.0);
        rec.k2_candidates[2 * i] = (xi + 1.0 - rad) / 2.0;     // minus sign first
        rec.k2_candidates[2 * i + 1] = (xi + 1.0 + rad) / 2.0;
    }

    // With rho = 1 and the minus sign the real solution in [0,1] comes
    // first in candidate order, so a simple scan realises the selection.
    for (const Complex& cand : rec.k2_candidates) {
        if (real_in_unit_interval(cand)) {
            rec.selected_k2 = Complex(std::clamp(cand.real(), 0.0, 1.0), 0.0);
            rec.best_effort = false;
            return rec;
        }
    }

    // No real candidate in [0,1] (negative discriminant): smallest
    // |Im|, ties broken by smaller |k^2|, then by Im >= 0.
    const Complex* best = &rec.k2_candidates[0];
    for (const Complex& cand : rec.k2_candidates) {
        const double di = std::abs(cand.imag()) - std::abs(best->imag());
        if (di < -1e-15) {
            best = &cand;
        } else if (std::abs(di) <= 1e-15) {
            const double dm = std::abs(cand) - std::abs(*best);
            if (dm < -1e-15 || (std::abs(dm) <= 1e-15 && cand.imag() > best->imag())) {
                best = &cand;
            }
        }
    }
    rec.selected_k2 = *best;
    rec.best_effort = true;
    return rec;
}

EDecomposition decompose(const Invariants& inv)
{
    check_nondegenerate(inv);
    const ModulusRecovery rec = recover_modulus(inv);
    const Complex k2 = rec.selected_k2;

    const numx::CubicRoots roots =
        numx::solve_depressed_cubic(-inv.g2() / 4.0, -inv.g3() / 4.0);
    const std::array<Complex, 3> rs = {roots.r1, roots.r2, roots.r3};

    // Order the roots so that (e2-e3)/(e1-e3) = k^2; among near-ties
    // (k^2 = 1/2 admits two orderings) prefer the one with the larger
    // Re(e1-e3) so that C stays on the principal side.
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int best_perm = -1;
    double best_err = std::numeric_limits<double>::infinity();
    Complex best_d;
    for (const auto& perm : perms) {
        const Complex d = rs[perm[0]] - rs[perm[2]];
        if (std::abs(d) == 0.0) {
            continue;
        }
        const double err = std::abs((rs[perm[1]] - rs[perm[2]]) / d - k2);
        const bool better =
            (err < best_err - 1e-12) ||
            (err < best_err + 1e-12 &&
             (d.real() > best_d.real() + 1e-12 ||
              (std::abs(d.real() - best_d.real()) <= 1e-12 && d.imag() > best_d.imag())));
        if (best_perm < 0 || better) {
            best_perm = static_cast<int>(&perm - &perms[0]);
            best_err = err;
            best_d = d;
        }
    }
    if (best_perm < 0) {
        throw DegenerateLattice("decompose: repeated roots, lattice degenerate");
    }

    EDecomposition dec{rs[perms[best_perm][0]], rs[perms[best_perm][1]],
                       rs[perms[best_perm][2]], Complex(0.0), jacobi::Modulus(k2)};
    // For real invariants the root differences carry rounding dust in
    // the imaginary part; snap it before taking the branch-sensitive
    // square root.
    dec.C = numx::principal_sqrt(snap_real(dec.e1 - dec.e3));
    return dec;
}

Complex absolute_invariant_from_k2(Complex k2)
{
    const Complex f1 = k2 + 1.0;
    const Complex f2 = k2 - 2.0;
    const Complex f3 = k2 - 0.5;
    const Complex den = f1 * f1 * f2 * f2 * f3 * f3;
    if (std::abs(den) == 0.0) {
        throw DomainError("absolute invariant undefined at k^2 in {-1, 2, 1/2}");
    }
    const Complex num = k2 * k2 - k2 + 1.0;
    return num * num * num / den;
}

Complex wp(Complex z, const EDecomposition& dec)
{
    const Complex k2 = dec.m.k2();
    const Complex C2 = dec.C * dec.C;

    Complex sn;
    try {
        sn = jacobi::sn_cn_dn(dec.C * z, dec.m).sn;
    } catch (const PoleProximity&) {
        // A pole of sn is a regular point of the function: its value
        // there is e3.
        return dec.e3;
    }
    if (std::abs(sn) < 1e-10) {
        throw PoleProximity("wp: argument within ~1e-10 of a lattice point");
    }
    return C2 / (sn * sn) - (1.0 + k2) * C2 / 3.0;
}

Complex wp_prime(Complex z, const EDecomposition& dec)
{
    const Complex C2 = dec.C * dec.C;

    jacobi::JacobiValues jv;
    try {
        jv = jacobi::sn_cn_dn(dec.C * z, dec.m);
    } catch (const PoleProximity&) {
        // Half-period critical point: the derivative vanishes.
        return Complex(0.0);
    }
    if (std::abs(jv.sn) < 1e-10) {
        throw PoleProximity("wp_prime: argument within ~1e-10 of a lattice point");
    }
    return -2.0 * C2 * dec.C * jv.cn * jv.dn / (jv.sn * jv.sn * jv.sn);
}

Invariants rescale(const Invariants& inv, Complex lambda)
{
    if (std::abs(lambda) == 0.0) {
        throw DomainError("rescale: lambda must be nonzero");
    }
    const Complex l2 = lambda * lambda;
    const Complex l4 = l2 * l2;
    return Invariants(inv.g2() / l4, inv.g3() / (l4 * l2));
}

Lattice lattice(const EDecomposition& dec)
{
    if (dec.m.k2() == Complex(1.0)) {
        throw DegenerateLattice("lattice: k^2 = 1 has an infinite period");
    }
    if (!dec.m.guaranteed()) {
        throw DomainError("lattice: requires a real modulus in (0,1)");
    }
    if (dec.m.m() == 0.0) {
        throw DegenerateLattice("lattice: k^2 = 0 has an infinite period");
    }
    const jacobi::QuarterPeriods qp = jacobi::complete_k(dec.m);
    return Lattice{qp.K() / dec.C, Complex(0.0, 1.0) * qp.Kprime() / dec.C};
}

Complex reduce_to_fundamental(Complex z, const Lattice& lat)
{
    const Complex p1 = 2.0 * lat.omega1;
    const Complex p2 = 2.0 * lat.omega3;
    const double det = p1.real() * p2.imag() - p2.real() * p1.imag();
    if (det == 0.0) {
        throw DegenerateLattice("reduce_to_fundamental: collapsed period basis");
    }
    double a = (z.real() * p2.imag() - p2.real() * z.imag()) / det;
    double b = (p1.real() * z.imag() - z.real() * p1.imag()) / det;
    a -= std::floor(a + 0.5);
    b -= std::floor(b + 0.5);
    return a * p1 + b * p2;
}

// --- Laurent-series oracle -------------------------------------------------
//
// wp about the origin: 1/z^2 + sum_{n>=2} c_n z^{2n-2} with c2 = g2/20,
// c3 = g3/28 and c_n = 3/((2n+1)(n-3)) sum_{m=2}^{n-2} c_m c_{n-m}.
// Evaluation: halve z until inside the estimated convergence disk, sum
// the series for the value and the derivative, then apply the
// duplication formula pairwise.  Deliberately shares nothing with the
// sn-based route above.

namespace {

constexpr int kOracleTerms = 48;

std::vector<Complex> laurent_coefficients(const Invariants& inv)
{
    std::vector<Complex> c(kOracleTerms + 1, Complex(0.0));
    c[2] = inv.g2() / 20.0;
    c[3] = inv.g3() / 28.0;
    for (int n = 4; n <= kOracleTerms; ++n) {
        Complex s(0.0);
        for (int m = 2; m <= n - 2; ++m) {
            s += c[m] * c[n - m];
        }
        c[n] = 3.0 * s / ((2.0 * n + 1.0) * (n - 3.0));
    }
    return c;
}

// |c_n| ~ r^{-2n} where r is the distance to the nearest nonzero
// lattice point, so |c_n|^{-1/(2n)} estimates the convergence radius.
double series_radius(const std::vector<Complex>& c)
{
    double r = std::numeric_limits<double>::infinity();
    for (int n = kOracleTerms / 2; n <= kOracleTerms; ++n) {
        const double a = std::abs(c[n]);
        if (a > 0.0) {
            r = std::min(r, std::pow(a, -1.0 / (2.0 * n)));
        }
    }
    if (!std::isfinite(r)) {
        throw NonConvergence("wp_oracle: cannot estimate series radius");
    }
    return r;
}

} // namespace

Complex wp_oracle(Complex z, const Invariants& inv)
{
    check_nondegenerate(inv);

    const std::vector<Complex> c = laurent_coefficients(inv);
    const double radius = series_radius(c);

    if (std::abs(z) < 1e-10) {
        throw PoleProximity("wp_oracle: argument within 1e-10 of the origin pole");
    }

    int halvings = 0;
    Complex zr = z;
    while (std::abs(zr) > 0.5 * radius) {
        zr *= 0.5;
        ++halvings;
        if (halvings > 64) {
            throw NonConvergence("wp_oracle: halving did not reach the series disk");
        }
    }

    const Complex z2 = zr * zr;
    Complex P = 1.0 / z2;
    Complex Pp = -2.0 / (z2 * zr);
    Complex pw = z2;        // z^{2n-2} at n = 2
    Complex last(0.0);
    for (int n = 2; n <= kOracleTerms; ++n) {
        const Complex term = c[n] * pw;
        P += term;
        Pp += (2.0 * n - 2.0) * c[n] * pw / zr;
        last = term;
        pw *= z2;
    }
    // Geometric tail bound with ratio <= 1/4 inside the halved disk.
    if (std::abs(last) / 3.0 > 1e-12 * (1.0 + std::abs(P))) {
        throw NonConvergence("wp_oracle: truncation bound exceeds 1e-12");
    }

    const Complex g2 = inv.g2();
    for (int i = 0; i < halvings; ++i) {
        if (std::abs(Pp) < 1e-12 * (1.0 + std::abs(P))) {
            throw PoleProximity("wp_oracle: duplication step hit a critical point");
        }
        const Complex phi = (6.0 * P * P - g2 / 2.0) / (2.0 * Pp);
        const Complex Pn = -2.0 * P + phi * phi;
        const Complex Ppn = -Pp + 6.0 * P * phi - 2.0 * phi * phi * phi;
        P = Pn;
        Pp = Ppn;
    }
    return P;
}

ZeroPair wp_zeros(const Invariants& inv)
{
    if (std::abs(inv.g2()) == 0.0) {
        throw UnsupportedInvariant(
            "wp_zeros: equianharmonic case g2 = 0 is outside the closed form");
    }
    check_nondegenerate(inv);

    const EDecomposition dec = decompose(inv);
    const Complex k2 = dec.m.k2();
    const Complex w = numx::principal_sqrt(3.0 / (1.0 + k2));

    // inverse_sn needs the complex branch: 3/(1+k^2) > 1 throughout.
    const Complex u = jacobi::inverse_sn(w, dec.m);
    const Complex theta_raw = u / dec.C;

    Complex theta = theta_raw;
    if (dec.m.guaranteed() && dec.m.m() > 0.0) {
        const Lattice lat = lattice(dec);
        const Complex t = reduce_to_fundamental(theta_raw, lat);
        const Complex tn = reduce_to_fundamental(-theta_raw, lat);
        if (t.real() > tn.real()) {
            theta = t;
        } else if (tn.real() > t.real()) {
            theta = tn;
        } else {
            theta = (t.imag() >= tn.imag()) ? t : tn;
        }
    }

    const Complex residual = wp_oracle(theta, inv);
    if (std::abs(residual) >= 1e-8) {
        throw NonConvergence("wp_zeros: oracle verification of the zero failed");
    }
    return ZeroPair{theta, -theta};
}

} // namespace weierstrass
} // namespace wpzero
