#ifndef WPZERO_JACOBI_HPP
#define WPZERO_JACOBI_HPP

#include "wpzero/numerics.hpp"

namespace wpzero {
namespace jacobi {

/// Elliptic modulus bookkeeping: k^2, its complement 1-k^2 and the
/// principal square root k.
///
/// The guaranteed-accuracy regime of this library is real k^2 in [0,1).
/// Complex k^2 is accepted and carried through the closed-form algebra,
/// but sn/cn/dn evaluation is only provided inside the guaranteed
/// regime; results derived from complex moduli are verified downstream
/// against the Laurent oracle instead.
class Modulus {
public:
    explicit Modulus(Complex k2);

    Complex k2() const { return k2_; }
    Complex kprime2() const { return kprime2_; }
    Complex k() const { return k_; }

    /// True iff k^2 is real with 0 <= k^2 < 1.
    bool guaranteed() const { return guaranteed_; }

    /// Real k^2 value; only meaningful in the guaranteed regime.
    double m() const { return k2_.real(); }

private:
    Complex k2_;
    Complex kprime2_;
    Complex k_;
    bool guaranteed_;
};

/// Complete elliptic integrals K(k) and K'(k) = K(k').  Values are
/// computed via the AGM; accessors throw DegenerateLattice when the
/// requested period is infinite (K' at k^2 = 0, K at k^2 = 1).
class QuarterPeriods {
public:
    QuarterPeriods(double K, double Kprime) : K_(K), Kprime_(Kprime) {}

    double K() const;
    double Kprime() const;

private:
    double K_;
    double Kprime_;
};

/// K and K' for a modulus in the guaranteed regime, relative accuracy
/// ~1e-14.  K = pi/(2 agm(1, k')), K' = pi/(2 agm(1, k)).
QuarterPeriods complete_k(const Modulus& m);

/// Jacobi sn, cn, dn for real argument and real parameter m = k^2 in
/// [0,1], by the descending Landen (AGM) recursion.
void sn_cn_dn_real(double u, double m, double& sn, double& cn, double& dn);

struct JacobiValues {
    Complex sn;
    Complex cn;
    Complex dn;
};

/// Jacobi sn, cn, dn at complex argument, real modulus in the
/// guaranteed regime.  Computed from the real-argument recursion at
/// Re(u) with modulus k and at Im(u) with the complementary modulus,
/// combined through the addition decomposition; accuracy ~1e-11 away
/// from the pole lattice.
///
/// Throws PoleProximity when u is within 1e-12 of a pole of sn, and
/// DomainError outside the guaranteed regime.
JacobiValues sn_cn_dn(Complex u, const Modulus& m);

/// Inverse of sn: u with sn(u) = w, via u = w RF(1-w^2, 1-k^2 w^2, 1)
/// on principal branches.  In the guaranteed regime the result is
/// folded to the principal value |Re u| <= K, Im u in (-K', K'];
/// the value is canonical only up to the symmetries that preserve sn
/// (negation-reflection and lattice translation).
Complex inverse_sn(Complex w, const Modulus& m);

} // namespace jacobi
} // namespace wpzero

#endif
