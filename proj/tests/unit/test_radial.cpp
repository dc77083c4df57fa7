#include <doctest.h>

#include <cmath>

#include "diraim/error.hpp"
#include "diraim/radial.hpp"
#include "oracles.hpp"

using namespace diraim;

namespace {

RadialConfig reference()
{
    RadialConfig c;
    c.V0 = 6.0;
    c.V1 = -1.0;
    c.alpha = 0.5;
    c.M = 5.0;
    c.D = 5;
    c.n = 1;
    return c;
}

// A quantized shape with prescribed s > 0, rho and eps: E' = -(s^2 + rho^2/(4 s^2)).
RadialShape synthetic(double rho, double eps, int n, double q)
{
    const double s = std::sqrt(eps + 0.25) - n - 0.5;
    RadialShape sh;
    sh.rho = rho;
    sh.eps_n = eps;
    sh.nu_nu1 = eps * q;
    sh.E_prime = -(s * s + rho * rho / (4 * s * s));
    sh.delta = 0.5 * (s + rho / (2 * s));
    sh.gamma = 0.5 * (s - rho / (2 * s));
    return sh;
}

} // namespace

TEST_CASE("substitutions vanish with the potentials")
{
    RadialConfig c = reference();
    c.V1 = 0.0;
    const PekerisCoeffs k = pekeris_coeffs(c.q, c.alpha, 0.3);
    CHECK(substituted_terms(c, 1.0, 0.0, k).rho == 0.0);
    c.V0 = 0.0;
    const RadialTerms t = substituted_terms(c, 1.0, 0.0, k);
    CHECK(t.nu_nu1 == 0.0);
    CHECK(t.eps_n == 0.0);
}

TEST_CASE("substitution arithmetic")
{
    RadialConfig c = reference();
    c.q = Deformation(0.6);
    const PekerisCoeffs k = pekeris_coeffs(c.q, c.alpha, 0.1671);
    const double E = -1.2, w = 214.89;
    const RadialTerms t = substituted_terms(c, E, w, k);
    const double a2 = 0.25, sq = std::sqrt(0.6);
    CHECK(t.E_prime * a2 == doctest::Approx(-(w * (k.c0 - k.c1 / (2 * sq) + k.c2 / 1.2) + (25.0 - E * E))));
    CHECK(t.rho * a2 == doctest::Approx(w * (k.c1 / (2 * sq) - k.c2 / 1.2) + (-1.0) * (5.0 + E)));
    CHECK(t.nu_nu1 * a2 == doctest::Approx(w * k.c2 / 4 + 6.0 * (5.0 + E)));
    CHECK(t.eps_n == doctest::Approx(t.nu_nu1 / 0.6));
}

TEST_CASE("golden shape at the reference energy")
{
    // frozen regression values: table configuration, chain-free l' = 1, E = -6.4721
    const RadialConfig c = reference();
    const PekerisCoeffs k = pekeris_coeffs(c.q, c.alpha, 0.1671);
    const double w = centrifugal_omega(1.0, 5, 0.1671).omega;
    const RadialTerms t = substituted_terms(c, -6.4721, w, k);
    CHECK(t.E_prime == doctest::Approx(-4 * (w * k.constant_part() + (25.0 - 6.4721 * 6.4721))));
    CHECK(t.rho == doctest::Approx(4 * (w * k.tanh_part() - (5.0 - 6.4721))));
    CHECK(t.nu_nu1 == doctest::Approx(4 * (w * k.sech2_part() + 6.0 * (5.0 - 6.4721))));
    const RadialShape sh = substituted_params(c, -6.4721, w, k);
    CHECK(4 * sh.delta * sh.delta == doctest::Approx(sh.rho - sh.E_prime));
    CHECK(4 * sh.gamma * sh.gamma == doctest::Approx(-sh.rho - sh.E_prime));
}

TEST_CASE("residual without tanh and centrifugal terms")
{
    RadialConfig c = reference();
    c.V1 = 0.0;
    c.n = 0;
    const PekerisCoeffs k = pekeris_coeffs(c.q, c.alpha, 1.0);
    for (double E : {-4.0, -1.0, 0.5, 3.0}) {
        const double eps = c.V0 * (c.M + E) / (c.alpha * c.alpha);
        const double s = std::sqrt(eps + 0.25) - 0.5;
        CHECK(energy_residual(c, E, 0.0, k) == doctest::Approx(c.M * c.M - E * E - c.alpha * c.alpha * s * s));
    }
    // all potentials off: s = 0 at n = 0 is the quantization pole
    c.V0 = 0.0;
    CHECK_THROWS_AS((void)energy_residual(c, 1.0, 0.0, k), DomainError);
}

TEST_CASE("residual errors")
{
    RadialConfig c = reference();
    c.V0 = -50.0;
    const PekerisCoeffs k = pekeris_coeffs(c.q, c.alpha, 1.0);
    CHECK_THROWS_AS((void)energy_residual(c, 0.0, 0.0, k), DomainError);
    CHECK_THROWS_AS(quantized_sum(-1.0, 0), DomainError);
}

TEST_CASE("both quantization routes agree")
{
    auto g = oracle::rng(99);
    int checked = 0;
    for (int i = 0; i < 2000 && checked < 300; ++i) {
        RadialConfig c = reference();
        c.q = Deformation(oracle::uniform(g, 0.2, 1.5));
        c.V0 = oracle::uniform(g, 0.0, 10.0);
        c.V1 = oracle::uniform(g, -3.0, 3.0);
        c.n = oracle::uniform_int(g, 0, 3);
        const double re = oracle::uniform(g, 0.5, 4.0);
        const PekerisCoeffs k = pekeris_coeffs(c.q, c.alpha, re);
        const double w = centrifugal_omega(oracle::uniform(g, 0.0, 3.0), 5, re).omega;
        const double E = oracle::uniform(g, -4.9, 4.9);
        RadialShape sh;
        try {
            sh = substituted_params(c, E, w, k);
        } catch (const NotBoundError&) {
            continue;
        }
        const double s = std::sqrt(sh.eps_n + 0.25) - c.n - 0.5;
        if (!(sh.eps_n + 0.25 >= 0) || s <= 0.0)
            continue;
        const double S = sh.delta + sh.gamma;
        const double r62 = energy_residual(c, E, w, k);
        const double r61 = eigenvalue_residual(sh, c.n);
        const double rhs = c.alpha * c.alpha * r61 * (S + s) * (1 - sh.rho * sh.rho / (4 * S * S * s * s));
        const double lhs = r62 * (S + s + 2 * c.n + 1);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max({1.0, std::abs(lhs), std::abs(r62) * (S + s)}));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("radial wave functions: closed form, decay, nodes and equation")
{
    RadialConfig c = reference();
    for (double q : {1.0, 0.6}) {
        c.q = Deformation(q);
        for (int n = 0; n <= 2; ++n) {
            const RadialShape sh = synthetic(3.0, 60.0, n, q);
            REQUIRE(sh.delta > 0.0);
            REQUIRE(sh.gamma > 0.0);
            if (n == 0) {
                for (double r : {0.3, 1.0, 4.0}) {
                    const double t = tanh_q(c.q, c.alpha * r);
                    CHECK(radial_wavefunction(sh, c, 0, r)
                          == doctest::Approx(std::pow((1 - t) / 2, sh.delta) * std::pow((1 + t) / 2, sh.gamma)));
                }
            }
            std::vector<double> vals;
            double peak = 0.0;
            for (int k = 1; k <= 3000; ++k) {
                const double r = 0.01 * k;
                vals.push_back(radial_wavefunction(sh, c, n, r));
                peak = std::max(peak, std::abs(vals.back()));
            }
            // nodes at r <= 0 fall outside the sampled half line
            CHECK(oracle::sign_changes(vals) <= n);
            if (q == 1.0)
                CHECK(std::abs(radial_wavefunction(sh, c, n, 30.0 / c.alpha)) < 1e-6 * peak);
            for (int k = 1; k <= 50; ++k)
                CHECK(oracle::radial_ode_residual(sh, c, n, 0.2 * k) <= 1e-4);
        }
    }
    RadialShape bad;
    CHECK_THROWS_AS((void)radial_wavefunction(bad, c, 0, 1.0), DomainError);
}

TEST_CASE("solved bound states have n nodes and solve the radial equation")
{
    double last_peak = 0.0;
    for (int n = 0; n <= 2; ++n) {
        const ProblemConfig c = oracle::bound_config(5, n, 3.0, 1);
        const auto states = solve_bound_states(c, default_scan(c));
        REQUIRE_FALSE(states.empty());
        const BoundState& st = states.front();
        const PekerisCoeffs k = pekeris_coeffs(c.radial.q, c.radial.alpha, c.r_e);
        const RadialShape sh = quantized_shape(c.radial, st.E, centrifugal_omega(st.ell_prime, 5, c.r_e).omega, k);
        std::vector<double> vals;
        for (int i = 1; i <= 4000; ++i)
            vals.push_back(radial_wavefunction(sh, c.radial, n, 0.01 * i));
        CHECK(oracle::sign_changes(vals) == n);
        // the unnormalised peak amplitude grows with n
        double peak = 0.0;
        for (double v : vals)
            peak = std::max(peak, std::abs(v));
        CHECK(peak >= last_peak);
        last_peak = peak;
        for (double r : {0.5, 2.0, 5.0, 12.0})
            CHECK(oracle::radial_ode_residual(sh, c.radial, n, r) <= 1e-4);
    }
}
