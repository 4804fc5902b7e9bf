#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "wpzero/numerics.hpp"

using namespace wpzero;
using namespace wpzero::numerics;
using testsupport::uniform;
using testsupport::uniform_complex;

namespace {

Complex cubic_value(Complex t, Complex p, Complex q)
{
    return t * t * t + p * t + q;
}

} // namespace

TEST_CASE("principal branches")
{
    CHECK(principal_sqrt(Complex(-1.0, 0.0)) == Complex(0.0, 1.0));
    // negative-zero imaginary part must land on the same side of the cut
    CHECK(principal_sqrt(Complex(-1.0, -0.0)) == Complex(0.0, 1.0));
    CHECK(principal_cbrt(Complex(8.0, 0.0)).real() == doctest::Approx(2.0));
    const Complex c = principal_cbrt(Complex(-8.0, 0.0));
    CHECK(std::arg(c) == doctest::Approx(3.141592653589793 / 3.0)); // (-pi/3, pi/3]
    CHECK(std::abs(c) == doctest::Approx(2.0));
}

TEST_CASE("depressed cubic: triple zero root")
{
    const CubicRoots r = solve_depressed_cubic(Complex(0.0), Complex(0.0));
    CHECK(std::abs(r.r1) == 0.0);
    CHECK(std::abs(r.r2) == 0.0);
    CHECK(std::abs(r.r3) == 0.0);
}

TEST_CASE("depressed cubic: xi cubic of the (7,3) invariants")
{
    // a from g2=7, g3=3; the real root is exactly 21/5.
    const Complex a(-23.1525, 0.0);
    const CubicRoots r = solve_depressed_cubic(a, -a);
    bool found = false;
    for (const Complex t : {r.r1, r.r2, r.r3}) {
        if (std::abs(t - Complex(4.2)) < 1e-10) {
            found = true;
        }
        CHECK(std::abs(cubic_value(t, a, -a)) < 1e-10 * std::abs(a));
    }
    CHECK(found);
    // rho = 1 with principal radicals lands on the real root
    CHECK(std::abs(r.r1 - Complex(4.2)) < 1e-12);
}

TEST_CASE("depressed cubic: rescaled 4t^3 - 7t - 3")
{
    const CubicRoots r = solve_depressed_cubic(Complex(-7.0 / 4.0), Complex(-3.0 / 4.0));
    for (const Complex expect : {Complex(1.5), Complex(-0.5), Complex(-1.0)}) {
        const double d = std::min({std::abs(r.r1 - expect), std::abs(r.r2 - expect),
                                   std::abs(r.r3 - expect)});
        CHECK(d < 1e-12);
        const Complex v = 4.0 * expect * expect * expect - 7.0 * expect - 3.0;
        CHECK(std::abs(v) == 0.0);
    }
}

TEST_CASE("depressed cubic: discriminant-zero boundary stays real")
{
    // a = -27/4 makes (a/3)^3 + (a/2)^2 vanish exactly (the g3 = 0 case).
    const Complex a(-6.75, 0.0);
    const CubicRoots r = solve_depressed_cubic(a, -a);
    CHECK(r.r1.imag() == 0.0);
    CHECK(r.r1.real() == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(r.r2.real() == doctest::Approx(-3.0).epsilon(1e-13));
    CHECK(r.r3.real() == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("depressed cubic: random residual and root-sum properties")
{
    std::mt19937 rng(812025);
    for (int i = 0; i < 1000; ++i) {
        const Complex p = uniform_complex(rng, 10.0);
        const Complex q = uniform_complex(rng, 10.0);
        const double scale = std::max({1.0, std::abs(p), std::abs(q)});
        const CubicRoots r = solve_depressed_cubic(p, q);
        for (const Complex t : {r.r1, r.r2, r.r3}) {
            CHECK(std::abs(cubic_value(t, p, q)) < 1e-9 * scale);
        }
        CHECK(std::abs(r.r1 + r.r2 + r.r3) <
              1e-11 * std::max({1.0, std::abs(r.r1), std::abs(r.r2), std::abs(r.r3)}));
    }
}

TEST_CASE("carlson_rf: degenerate and classical values")
{
    for (const Complex x : {Complex(1.0), Complex(2.5), Complex(0.3, 0.4)}) {
        const Complex v = carlson_rf(x, x, x);
        CHECK(std::abs(v - 1.0 / principal_sqrt(x)) < 1e-13 * std::abs(v));
    }
    CHECK(carlson_rf(0.0, 1.0, 1.0) ==
          doctest::Approx(3.141592653589793 / 2.0).epsilon(1e-13));
    // K at k^2 = 1/2, independently frozen from the AGM
    CHECK(carlson_rf(0.0, 0.5, 1.0) ==
          doctest::Approx(1.8540746773013719).epsilon(1e-13));
}

TEST_CASE("carlson_rf: permutation symmetry")
{
    std::mt19937 rng(77);
    for (int i = 0; i < 200; ++i) {
        Complex x = uniform_complex(rng, 3.0);
        Complex y = uniform_complex(rng, 3.0);
        Complex z = uniform_complex(rng, 3.0);
        // keep away from the all-negative-real degeneracies
        x += Complex(3.5, 0.0);
        const Complex a = carlson_rf(x, y, z);
        const Complex b = carlson_rf(z, x, y);
        const Complex c = carlson_rf(y, z, x);
        CHECK(std::abs(a - b) <= 1e-13 * std::abs(a));
        CHECK(std::abs(a - c) <= 1e-13 * std::abs(a));
    }
}

TEST_CASE("carlson_rf: zero-mean entry point contracts")
{
    // x + y + z = 0 exactly: the first duplication mean vanishes, which
    // is the generic situation for the zero-formula arguments.
    const Complex v = carlson_rf(Complex(-1.5), Complex(0.5), Complex(1.0));
    // sn(u) = sqrt(5/2) must hold for u = sqrt(5/2) * v at k^2 = 1/5;
    // the frozen value of u is 1.6596235986105280 - 1.2298294422249383 i.
    const Complex u = std::sqrt(2.5) * v;
    CHECK(std::abs(u.real() - 1.6596235986105280) < 1e-12);
    CHECK(std::abs(std::abs(u.imag()) - 1.2298294422249383) < 1e-12);
}

TEST_CASE("carlson_rf: rejects more than one zero argument")
{
    CHECK_THROWS_AS(carlson_rf(Complex(0.0), Complex(0.0), Complex(1.0)), DomainError);
}

TEST_CASE("agm: fixed points and oracle value")
{
    CHECK(agm(1.0, 1.0) == 1.0);
    CHECK(agm(3.7, 3.7) == 3.7);
    // k^2 = 1/5 complement, frozen independently
    CHECK(agm(1.0, 0.8944272) == doctest::Approx(0.94647746380124751).epsilon(1e-14));
    CHECK(agm(1.0, std::sqrt(0.8)) == doctest::Approx(0.94647745917206802).epsilon(1e-14));
}

TEST_CASE("agm: one-step identity and bracketing")
{
    std::mt19937 rng(4242);
    for (int i = 0; i < 200; ++i) {
        const double a = uniform(rng, 0.1, 10.0);
        const double b = uniform(rng, 0.1, 10.0);
        const double m = agm(a, b);
        CHECK(m == agm(0.5 * (a + b), std::sqrt(a * b)));
        CHECK(m >= std::min(a, b));
        CHECK(m <= std::max(a, b));
    }
}

TEST_CASE("agm: domain errors")
{
    CHECK_THROWS_AS(agm(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(agm(1.0, -2.0), DomainError);
}
