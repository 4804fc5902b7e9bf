#ifndef WPZERO_WEIERSTRASS_HPP
#define WPZERO_WEIERSTRASS_HPP

#include <array>

#include "wpzero/jacobi.hpp"
#include "wpzero/numerics.hpp"

namespace wpzero {
namespace weierstrass {

/// The invariant pair (g2, g3) with its derived quantities.
class Invariants {
public:
    Invariants(Complex g2, Complex g3) : g2_(g2), g3_(g3) {}

    Complex g2() const { return g2_; }
    Complex g3() const { return g3_; }

    /// Discriminant g2^3 - 27 g3^2; zero means a degenerate lattice.
    Complex discriminant() const;

    /// g2^3/(27 g3^2).  Throws DomainError when g3 = 0 (the value is
    /// infinite there; the cubic coefficient below stays finite).
    Complex absolute_invariant() const;

    /// Coefficient a = (27/4) g2^3/(27 g3^2 - g2^3) of the modulus
    /// cubic xi^3 + a xi - a = 0.  Finite for all non-degenerate
    /// invariants, including g3 = 0 where it equals -27/4 exactly.
    Complex xi_cubic_coefficient() const;

    /// True when the discriminant vanishes to rounding accuracy.
    bool degenerate() const;

private:
    Complex g2_;
    Complex g3_;
};

/// Factorisation 4y^3 - g2 y - g3 = 4(y-e1)(y-e2)(y-e3) together with
/// the scale C = sqrt(e1 - e3) and modulus k^2 = (e2-e3)/(e1-e3)
/// bridging the sn form of the function.
struct EDecomposition {
    Complex e1;
    Complex e2;
    Complex e3;
    Complex C;
    jacobi::Modulus m;
};

/// Half-periods generating the period parallelogram.
struct Lattice {
    Complex omega1; // K/C
    Complex omega3; // i K'/C
};

/// The zero of the function in the fundamental cell and its negation.
struct ZeroPair {
    Complex theta0;
    Complex negation; // -theta0
};

/// Everything produced while recovering the modulus from (g2, g3):
/// the cubic coefficient, the three xi roots, the six k^2 candidates
/// (minus-sign value first for each xi), and the selected candidate.
struct ModulusRecovery {
    Complex a;
    numerics::CubicRoots xi_candidates;
    std::array<Complex, 6> k2_candidates;
    Complex selected_k2;
    /// True when no real candidate in [0,1] exists and the selection
    /// fell back to the smallest-|Im| candidate.
    bool best_effort;
};

/// g2 = (4/3)(k^4-k^2+1) C^4, g3 = (4/27)(k^2+1)(k^2-2)(2k^2-1) C^6.
Invariants invariants_from_modulus(const jacobi::Modulus& m, Complex C);

/// Invariants of the orbit with ODE constants alpha, beta:
/// g2 = 1/12 - alpha beta and the matching g3.  Requires
/// 1 - 12 alpha beta > 0 and beta != 0.
Invariants invariants_from_orbit(double alpha, double beta, const jacobi::Modulus& m);

/// Recover the modulus from the invariants through the xi cubic and
/// k^2 = (xi + 1 +- sqrt(xi^2 + 2 xi - 3))/2.  Selects the first real
/// candidate in [0,1] in rho-then-minus-sign order; otherwise the
/// candidate with the smallest |Im k^2| (ties: smaller |k^2|, then
/// non-negative imaginary part).
ModulusRecovery recover_modulus(const Invariants& inv);

/// Factor the cubic and order the roots so that the e-root relations
/// hold with the selected modulus; C is the principal square root of
/// e1 - e3.
EDecomposition decompose(const Invariants& inv);

/// (k^4-k^2+1)^3 / ((k^2+1)^2 (k^2-2)^2 (k^2-1/2)^2).  Throws
/// DomainError at the denominator zeros k^2 in {-1, 2, 1/2}, which are
/// exactly the g3 = 0 moduli.
Complex absolute_invariant_from_k2(Complex k2);

/// The function value through the sn form:
/// C^2/sn^2(Cz) - (1+k^2) C^2/3.
Complex wp(Complex z, const EDecomposition& dec);

/// Derivative -2 C^3 cn(Cz) dn(Cz)/sn^3(Cz).
Complex wp_prime(Complex z, const EDecomposition& dec);

/// Closed-form zero: theta0 = (1/C) arcsn(sqrt(3/(1+k^2)), k) with the
/// fourth-root branch of the prefactor pinned by the e-decomposition
/// (for the textbook cases C is the principal real root of
/// 3 g2/(4(k^4-k^2+1)) and the two expressions coincide).  The result
/// is reduced to the fundamental parallelogram centred at 0, the
/// representative with Re >= 0 (tie: Im >= 0) listed first, and is
/// checked against the Laurent oracle to |wp(theta0)| < 1e-8.
///
/// Throws UnsupportedInvariant when g2 = 0 and DegenerateLattice when
/// the discriminant vanishes.
ZeroPair wp_zeros(const Invariants& inv);

/// Invariant rescaling (g2, g3) -> (g2/lambda^4, g3/lambda^6); the
/// zeros of the result are lambda times the zeros of the input up to
/// sign and lattice translation.
Invariants rescale(const Invariants& inv, Complex lambda);

/// Half-periods omega1 = K/C, omega3 = i K'/C.  Requires a real
/// modulus in (0,1).
Lattice lattice(const EDecomposition& dec);

/// z - 2m omega1 - 2n omega3 with integer m, n such that the result
/// has coordinates in [-1/2, 1/2) in the period basis.
Complex reduce_to_fundamental(Complex z, const Lattice& lat);

/// Independent evaluation of the function by its Laurent expansion
/// (c2 = g2/20, c3 = g3/28, recursive higher coefficients) plus the
/// duplication formula for arguments beyond the series radius.  Shares
/// no code with the sn-based wp(); used to verify it and the zeros.
///
/// Throws PoleProximity near lattice points and NonConvergence when
/// the truncation bound cannot be met.
Complex wp_oracle(Complex z, const Invariants& inv);

} // namespace weierstrass
} // namespace wpzero

#endif
