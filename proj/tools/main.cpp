// Command-line front end: closed-form zeros of the Weierstrass function,
// modulus recovery, function evaluation, invariants, and relativistic
// orbit sampling, with JSON or CSV output.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wpzero/orbits.hpp"
#include "wpzero/weierstrass.hpp"

using wpzero::Complex;
namespace wz = wpzero::weierstrass;
namespace orb = wpzero::orbits;

namespace {

// All numeric payload is emitted with 17 significant digits so that
// values survive a parse/re-emit round trip bit-exactly.
std::string num(double v)
{
    if (!std::isfinite(v)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string csv_num(double v)
{
    return std::isfinite(v) ? num(v) : std::string();
}

std::string jnum(Complex z)
{
    return "{\"re\": " + num(z.real()) + ", \"im\": " + num(z.imag()) + "}";
}

struct Format {
    bool csv = false;
};

Complex parse_complex_literal(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw CLI::ValidationError("--z", "expected complex literal re,im");
    }
    std::size_t used_re = 0, used_im = 0;
    double re, im;
    try {
        re = std::stod(text.substr(0, comma), &used_re);
        im = std::stod(text.substr(comma + 1), &used_im);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--z", "expected complex literal re,im");
    }
    if (used_re != comma || used_im != text.size() - comma - 1) {
        throw CLI::ValidationError("--z", "expected complex literal re,im");
    }
    return Complex(re, im);
}

// xi belonging to the selected modulus candidate.
Complex selected_xi(const wz::ModulusRecovery& rec)
{
    return rec.selected_k2 + 1.0 / rec.selected_k2 - 1.0;
}

void cmd_zeros(double g2, double g3, bool verify, const Format& fmt)
{
    const wz::Invariants inv{Complex(g2), Complex(g3)};
    const wz::ModulusRecovery rec = wz::recover_modulus(inv);
    const wz::EDecomposition dec = wz::decompose(inv);
    const wz::ZeroPair zp = wz::wp_zeros(inv);

    std::optional<wz::Lattice> lat;
    if (dec.m.guaranteed() && dec.m.m() > 0.0) {
        lat = wz::lattice(dec);
    }
    std::optional<double> residual;
    if (verify) {
        residual = std::abs(wz::wp_oracle(zp.theta0, inv));
    }

    if (!fmt.csv) {
        std::cout << "{\n"
                  << "  \"command\": \"zeros\",\n"
                  << "  \"g2\": " << num(g2) << ",\n"
                  << "  \"g3\": " << num(g3) << ",\n"
                  << "  \"a\": " << jnum(rec.a) << ",\n"
                  << "  \"xi\": " << jnum(selected_xi(rec)) << ",\n"
                  << "  \"k2\": " << jnum(rec.selected_k2) << ",\n"
                  << "  \"best_effort\": " << (rec.best_effort ? "true" : "false") << ",\n"
                  << "  \"C\": " << jnum(dec.C) << ",\n"
                  << "  \"theta0\": " << jnum(zp.theta0) << ",\n"
                  << "  \"theta0_negation\": " << jnum(zp.negation) << ",\n"
                  << "  \"omega1\": " << (lat ? jnum(lat->omega1) : "null") << ",\n"
                  << "  \"omega3\": " << (lat ? jnum(lat->omega3) : "null");
        if (residual) {
            std::cout << ",\n  \"wp_residual\": " << num(*residual);
        }
        std::cout << "\n}\n";
        return;
    }

    std::cout << "g2,g3,a_re,a_im,xi_re,xi_im,k2_re,k2_im,best_effort,C_re,C_im,"
                 "theta0_re,theta0_im,negation_re,negation_im,"
                 "omega1_re,omega1_im,omega3_re,omega3_im";
    if (residual) {
        std::cout << ",wp_residual";
    }
    std::cout << "\n";
    const Complex xi = selected_xi(rec);
    std::cout << num(g2) << ',' << num(g3) << ',' << num(rec.a.real()) << ','
              << num(rec.a.imag()) << ',' << num(xi.real()) << ',' << num(xi.imag())
              << ',' << num(rec.selected_k2.real()) << ',' << num(rec.selected_k2.imag())
              << ',' << (rec.best_effort ? "true" : "false") << ',' << num(dec.C.real())
              << ',' << num(dec.C.imag()) << ',' << num(zp.theta0.real()) << ','
              << num(zp.theta0.imag()) << ',' << num(zp.negation.real()) << ','
              << num(zp.negation.imag()) << ','
              << (lat ? num(lat->omega1.real()) : std::string()) << ','
              << (lat ? num(lat->omega1.imag()) : std::string()) << ','
              << (lat ? num(lat->omega3.real()) : std::string()) << ','
              << (lat ? num(lat->omega3.imag()) : std::string());
    if (residual) {
        std::cout << ',' << num(*residual);
    }
    std::cout << "\n";
}

void cmd_modulus(double g2, double g3, const Format& fmt)
{
    const wz::Invariants inv{Complex(g2), Complex(g3)};
    const wz::ModulusRecovery rec = wz::recover_modulus(inv);
    const Complex delta = inv.discriminant();
    std::optional<Complex> J;
    if (g3 != 0.0) {
        J = inv.absolute_invariant();
    }
    const std::vector<Complex> xis = {rec.xi_candidates.r1, rec.xi_candidates.r2,
                                      rec.xi_candidates.r3};

    if (!fmt.csv) {
        std::cout << "{\n"
                  << "  \"command\": \"modulus\",\n"
                  << "  \"g2\": " << num(g2) << ",\n"
                  << "  \"g3\": " << num(g3) << ",\n"
                  << "  \"delta\": " << jnum(delta) << ",\n"
                  << "  \"absolute_invariant\": " << (J ? jnum(*J) : "null") << ",\n"
                  << "  \"a\": " << jnum(rec.a) << ",\n"
                  << "  \"xi_roots\": [" << jnum(xis[0]) << ", " << jnum(xis[1]) << ", "
                  << jnum(xis[2]) << "],\n"
                  << "  \"k2_candidates\": [";
        for (std::size_t i = 0; i < 6; ++i) {
            std::cout << (i ? ", " : "") << jnum(rec.k2_candidates[i]);
        }
        std::cout << "],\n"
                  << "  \"selected_k2\": " << jnum(rec.selected_k2) << ",\n"
                  << "  \"best_effort\": " << (rec.best_effort ? "true" : "false") << "\n"
                  << "}\n";
        return;
    }

    std::cout << "g2,g3,delta_re,delta_im,J_re,J_im,a_re,a_im";
    for (int i = 1; i <= 3; ++i) {
        std::cout << ",xi" << i << "_re,xi" << i << "_im";
    }
    for (int i = 1; i <= 6; ++i) {
        std::cout << ",k2c" << i << "_re,k2c" << i << "_im";
    }
    std::cout << ",selected_re,selected_im,best_effort\n";
    std::cout << num(g2) << ',' << num(g3) << ',' << num(delta.real()) << ','
              << num(delta.imag()) << ',' << (J ? num(J->real()) : std::string()) << ','
              << (J ? num(J->imag()) : std::string()) << ',' << num(rec.a.real()) << ','
              << num(rec.a.imag());
    for (const Complex& xi : xis) {
        std::cout << ',' << num(xi.real()) << ',' << num(xi.imag());
    }
    for (const Complex& c : rec.k2_candidates) {
        std::cout << ',' << num(c.real()) << ',' << num(c.imag());
    }
    std::cout << ',' << num(rec.selected_k2.real()) << ',' << num(rec.selected_k2.imag())
              << ',' << (rec.best_effort ? "true" : "false") << "\n";
}

void cmd_eval(double g2, double g3, Complex z, const Format& fmt)
{
    const wz::Invariants inv{Complex(g2), Complex(g3)};
    const wz::EDecomposition dec = wz::decompose(inv);
    const Complex p = wz::wp(z, dec);
    const Complex pp = wz::wp_prime(z, dec);
    const Complex oracle = wz::wp_oracle(z, inv);
    const double de_residual =
        std::abs(pp * pp - (4.0 * p * p * p - inv.g2() * p - inv.g3()));

    if (!fmt.csv) {
        std::cout << "{\n"
                  << "  \"command\": \"eval\",\n"
                  << "  \"g2\": " << num(g2) << ",\n"
                  << "  \"g3\": " << num(g3) << ",\n"
                  << "  \"z\": " << jnum(z) << ",\n"
                  << "  \"wp\": " << jnum(p) << ",\n"
                  << "  \"wp_prime\": " << jnum(pp) << ",\n"
                  << "  \"wp_oracle\": " << jnum(oracle) << ",\n"
                  << "  \"de_residual\": " << num(de_residual) << "\n"
                  << "}\n";
        return;
    }

    std::cout << "g2,g3,z_re,z_im,wp_re,wp_im,wp_prime_re,wp_prime_im,"
                 "oracle_re,oracle_im,de_residual\n";
    std::cout << num(g2) << ',' << num(g3) << ',' << num(z.real()) << ','
              << num(z.imag()) << ',' << num(p.real()) << ',' << num(p.imag()) << ','
              << num(pp.real()) << ',' << num(pp.imag()) << ',' << num(oracle.real())
              << ',' << num(oracle.imag()) << ',' << num(de_residual) << "\n";
}

void cmd_invariants(double alpha, double beta, double k2, bool verify, const Format& fmt)
{
    const wpzero::jacobi::Modulus m{Complex(k2)};
    const wz::Invariants inv = wz::invariants_from_orbit(alpha, beta, m);
    const Complex delta = inv.discriminant();
    std::optional<Complex> J;
    if (std::abs(inv.g3()) != 0.0) {
        J = inv.absolute_invariant();
    }
    std::optional<double> route_dev;
    if (verify) {
        const orb::OrbitConstants oc = orb::orbit_constants({alpha, beta, m});
        const wz::Invariants via = wz::invariants_from_modulus(m, Complex(oc.C));
        route_dev = std::max(std::abs(via.g2() - inv.g2()), std::abs(via.g3() - inv.g3()));
    }

    if (!fmt.csv) {
        std::cout << "{\n"
                  << "  \"command\": \"invariants\",\n"
                  << "  \"alpha\": " << num(alpha) << ",\n"
                  << "  \"beta\": " << num(beta) << ",\n"
                  << "  \"k2\": " << num(k2) << ",\n"
                  << "  \"g2\": " << num(inv.g2().real()) << ",\n"
                  << "  \"g3\": " << num(inv.g3().real()) << ",\n"
                  << "  \"delta\": " << jnum(delta) << ",\n"
                  << "  \"absolute_invariant\": " << (J ? jnum(*J) : "null");
        if (route_dev) {
            std::cout << ",\n  \"route_deviation\": " << num(*route_dev);
        }
        std::cout << "\n}\n";
        return;
    }

    std::cout << "alpha,beta,k2,g2,g3,delta_re,delta_im,J_re,J_im";
    if (route_dev) {
        std::cout << ",route_deviation";
    }
    std::cout << "\n";
    std::cout << num(alpha) << ',' << num(beta) << ',' << num(k2) << ','
              << num(inv.g2().real()) << ',' << num(inv.g3().real()) << ','
              << num(delta.real()) << ',' << num(delta.imag()) << ','
              << (J ? num(J->real()) : std::string()) << ','
              << (J ? num(J->imag()) : std::string());
    if (route_dev) {
        std::cout << ',' << num(*route_dev);
    }
    std::cout << "\n";
}

void cmd_orbit(double alpha, double beta, double k2, double theta_max, std::size_t n,
               bool verify, const Format& fmt)
{
    const wpzero::jacobi::Modulus m{Complex(k2)};
    const orb::OrbitParams params{alpha, beta, m};
    const orb::OrbitConstants oc = orb::orbit_constants(params);
    const auto samples = orb::sample_trajectory(oc, m, theta_max, n);

    std::optional<double> max_residual;
    if (verify) {
        double worst = 0.0;
        for (const auto& s : samples) {
            worst = std::max(worst, orb::ode_residual(oc, params, s.theta, 1e-4));
        }
        max_residual = worst;
    }

    if (!fmt.csv) {
        std::cout << "{\n"
                  << "  \"command\": \"orbit\",\n"
                  << "  \"alpha\": " << num(alpha) << ",\n"
                  << "  \"beta\": " << num(beta) << ",\n"
                  << "  \"k2\": " << num(k2) << ",\n"
                  << "  \"A\": " << num(oc.A) << ",\n"
                  << "  \"B\": " << num(oc.B) << ",\n"
                  << "  \"C\": " << num(oc.C) << ",\n"
                  << "  \"theta_max\": " << num(theta_max) << ",\n"
                  << "  \"n\": " << n << ",\n";
        if (max_residual) {
            std::cout << "  \"max_ode_residual\": " << num(*max_residual) << ",\n";
        }
        std::cout << "  \"samples\": [\n";
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& s = samples[i];
            std::cout << "    {\"theta\": " << num(s.theta) << ", \"r\": "
                      << (s.bound ? num(s.r) : "null") << ", \"x\": "
                      << (s.bound ? num(s.x) : "null") << ", \"y\": "
                      << (s.bound ? num(s.y) : "null") << ", \"bound\": "
                      << (s.bound ? "true" : "false") << "}"
                      << (i + 1 < samples.size() ? "," : "") << "\n";
        }
        std::cout << "  ]\n}\n";
        return;
    }

    std::cout << "A,B,C\n"
              << num(oc.A) << ',' << num(oc.B) << ',' << num(oc.C) << "\n"
              << "theta,r,x,y,bound\n";
    for (const auto& s : samples) {
        std::cout << num(s.theta) << ',' << (s.bound ? csv_num(s.r) : std::string())
                  << ',' << (s.bound ? csv_num(s.x) : std::string()) << ','
                  << (s.bound ? csv_num(s.y) : std::string()) << ','
                  << (s.bound ? "true" : "false") << "\n";
    }
    if (max_residual) {
        std::cout << "max_ode_residual," << num(*max_residual) << "\n";
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Closed-form zeros of the Weierstrass elliptic function and the "
                 "relativistic-orbit formulas behind them"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    double g2 = 0.0, g3 = 0.0, alpha = 0.0, beta = 0.0, k2 = 0.0;
    double theta_max = 0.0;
    std::size_t n = 0;
    std::string z_text;
    bool verify = false;

    CLI::App* zeros = app.add_subcommand("zeros", "Zeros of the function from (g2, g3)");
    zeros->add_option("--g2", g2, "Invariant g2")->required();
    zeros->add_option("--g3", g3, "Invariant g3")->required();
    zeros->add_flag("--verify", verify, "Check the zero against the Laurent oracle");

    CLI::App* modulus = app.add_subcommand("modulus", "Modulus recovery from (g2, g3)");
    modulus->add_option("--g2", g2, "Invariant g2")->required();
    modulus->add_option("--g3", g3, "Invariant g3")->required();

    CLI::App* eval = app.add_subcommand("eval", "Evaluate the function and derivative");
    eval->add_option("--g2", g2, "Invariant g2")->required();
    eval->add_option("--g3", g3, "Invariant g3")->required();
    eval->add_option("--z", z_text, "Evaluation point as re,im")->required();

    CLI::App* invariants =
        app.add_subcommand("invariants", "Invariants from orbit constants");
    invariants->add_option("--alpha", alpha, "Orbit ODE constant alpha")->required();
    invariants->add_option("--beta", beta, "Orbit ODE constant beta")->required();
    invariants->add_option("--k2", k2, "Modulus squared")->required();
    invariants->add_flag("--verify", verify, "Cross-check both invariant routes");

    CLI::App* orbit = app.add_subcommand("orbit", "Sample the polar orbit");
    orbit->add_option("--alpha", alpha, "Orbit ODE constant alpha")->required();
    orbit->add_option("--beta", beta, "Orbit ODE constant beta")->required();
    orbit->add_option("--k2", k2, "Modulus squared")->required();
    orbit->add_option("--theta-max", theta_max, "Largest sampled angle")->required();
    orbit->add_option("--n", n, "Number of samples")->required();
    orbit->add_flag("--verify", verify, "Report the worst ODE residual");

    // let --format appear after the subcommand name as well
    for (CLI::App* sc : {zeros, modulus, eval, invariants, orbit}) {
        sc->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const Format fmt{format == "csv"};
    try {
        if (app.got_subcommand(zeros)) {
            cmd_zeros(g2, g3, verify, fmt);
        } else if (app.got_subcommand(modulus)) {
            cmd_modulus(g2, g3, fmt);
        } else if (app.got_subcommand(eval)) {
            cmd_eval(g2, g3, parse_complex_literal(z_text), fmt);
        } else if (app.got_subcommand(invariants)) {
            cmd_invariants(alpha, beta, k2, verify, fmt);
        } else if (app.got_subcommand(orbit)) {
            cmd_orbit(alpha, beta, k2, theta_max, n, verify, fmt);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
